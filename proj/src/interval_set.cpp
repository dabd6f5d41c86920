#include "kq/interval_set.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "kq/errors.hpp"

namespace kq {

void IntervalSet::validate() const {
    if (hi.size() != lo.size() || frozen.size() != lo.size()) {
        throw AlignmentMismatch("interval arrays have mismatched lengths");
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
            throw Error("non-finite interval endpoint at index " + std::to_string(i));
        }
        if (lo[i] > hi[i]) {
            throw Error("inverted interval at index " + std::to_string(i));
        }
        if (frozen[i] && lo[i] != hi[i]) {
            throw Error("frozen interval with nonzero width at index " + std::to_string(i));
        }
    }
}

void IntervalSet::validate_against(std::span<const float> weights) const {
    validate();
    if (weights.size() != lo.size()) {
        throw AlignmentMismatch("interval set of size " + std::to_string(lo.size()) +
                                " does not align with tensor of size " +
                                std::to_string(weights.size()));
    }
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i] > weights[i] || weights[i] > hi[i]) {
            throw Error("interval at index " + std::to_string(i) +
                        " does not contain its weight");
        }
        if (frozen[i] && lo[i] != weights[i]) {
            throw Error("frozen interval at index " + std::to_string(i) +
                        " is not pinned to its weight");
        }
    }
}

namespace {
constexpr char kMagic[4] = {'K', 'Q', 'I', '1'};
}

void save_intervals(const IntervalSet& iv, const std::string& path) {
    iv.validate();
    std::string out;
    out.reserve(12 + 9 * iv.size());
    out.append(kMagic, 4);
    const std::uint64_t n = iv.size();
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((n >> (8 * i)) & 0xFF));
    for (std::size_t i = 0; i < iv.size(); ++i) {
        std::uint32_t u;
        std::memcpy(&u, &iv.lo[i], 4);
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xFF));
        std::memcpy(&u, &iv.hi[i], 4);
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xFF));
        out.push_back(static_cast<char>(iv.frozen[i] ? 1 : 0));
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoFailure("cannot open '" + path + "' for writing");
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
    os.flush();
    if (!os) throw IoFailure("write error on '" + path + "'");
}

IntervalSet load_intervals(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "' for reading");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());

    if (bytes.size() < 4 || std::memcmp(p, kMagic, 4) != 0) {
        throw BadMagic("'" + path + "': bad magic at byte offset 0 (want KQI1)");
    }
    if (bytes.size() < 12) throw TruncatedFile("'" + path + "': truncated header");
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(p[4 + i]) << (8 * i);
    if (bytes.size() != 12 + 9 * n) {
        throw TruncatedFile("'" + path + "': expected " + std::to_string(12 + 9 * n) +
                            " bytes, found " + std::to_string(bytes.size()));
    }
    IntervalSet iv;
    iv.resize(n);
    std::size_t off = 12;
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint32_t ulo = 0, uhi = 0;
        for (int b = 0; b < 4; ++b) ulo |= static_cast<std::uint32_t>(p[off + b]) << (8 * b);
        for (int b = 0; b < 4; ++b) uhi |= static_cast<std::uint32_t>(p[off + 4 + b]) << (8 * b);
        std::memcpy(&iv.lo[i], &ulo, 4);
        std::memcpy(&iv.hi[i], &uhi, 4);
        iv.frozen[i] = p[off + 8] & 1;
        off += 9;
    }
    iv.validate();
    return iv;
}

} // namespace kq
