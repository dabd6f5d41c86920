#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace kq::rng {

// Philox4x32-10 counter-based generator. Streams are keyed by
// (global seed, tensor id, block index, purpose), so draws are identical
// under any parallel schedule.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

std::uint64_t fnv1a(std::string_view s);

struct SeedSpec {
    std::uint64_t seed = 0;
    std::uint64_t tensor_id = 0; // fnv1a of the tensor name

    static SeedSpec for_tensor(std::uint64_t seed, std::string_view tensor_name) {
        return SeedSpec{seed, fnv1a(tensor_name)};
    }
};

class Stream {
public:
    Stream(const SeedSpec& spec, std::uint64_t block_index, std::uint32_t purpose = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform();
    // Uniform double in [lo, hi).
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller; draws are paired internally.
    double gaussian();

private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> base_;
    std::uint64_t block_ = 0; // counter of generated 128-bit blocks
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
    double cached_gauss_ = 0.0;
    bool has_cached_gauss_ = false;
};

} // namespace kq::rng
