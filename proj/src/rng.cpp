#include "kq/rng.hpp"

#include <cmath>

namespace kq::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        philox_round(ctr, key);
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001B3ull;
    }
    return h;
}

Stream::Stream(const SeedSpec& spec, std::uint64_t block_index, std::uint32_t purpose) {
    key_ = {static_cast<std::uint32_t>(spec.seed ^ spec.tensor_id),
            static_cast<std::uint32_t>((spec.seed >> 32) ^ (spec.tensor_id >> 32) ^ 0xA5A5A5A5u)};
    base_ = {static_cast<std::uint32_t>(block_index),
             static_cast<std::uint32_t>(block_index >> 32), purpose, 0};
}

void Stream::refill() {
    std::array<std::uint32_t, 4> ctr = base_;
    // block counter lives in the fourth word plus the high bits of purpose
    ctr[3] = static_cast<std::uint32_t>(block_);
    ctr[2] ^= static_cast<std::uint32_t>(block_ >> 32) << 16;
    buf_ = philox4x32(ctr, key_);
    ++block_;
    pos_ = 0;
}

std::uint32_t Stream::next_u32() {
    if (pos_ >= 4) refill();
    return buf_[static_cast<std::size_t>(pos_++)];
}

std::uint64_t Stream::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double Stream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::uniform(double lo, double hi) {
    return lo + uniform() * (hi - lo);
}

double Stream::gaussian() {
    if (has_cached_gauss_) {
        has_cached_gauss_ = false;
        return cached_gauss_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_gauss_ = r * std::sin(a);
    has_cached_gauss_ = true;
    return r * std::cos(a);
}

} // namespace kq::rng
