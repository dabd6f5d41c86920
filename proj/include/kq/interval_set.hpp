#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kq {

// Per-weight closed constraint intervals aligned with a tensor's flat index
// order. frozen[i] != 0 implies lo[i] == hi[i] == originating weight.
struct IntervalSet {
    std::vector<float> lo;
    std::vector<float> hi;
    std::vector<std::uint8_t> frozen;

    std::size_t size() const { return lo.size(); }
    float width(std::size_t i) const { return hi[i] - lo[i]; }
    void resize(std::size_t n) {
        lo.assign(n, 0.0f);
        hi.assign(n, 0.0f);
        frozen.assign(n, 0);
    }

    // Structural checks: aligned arrays, finite endpoints, lo <= hi,
    // frozen => zero width. Throws Error on violation.
    void validate() const;
    // Additionally checks lo <= w <= hi and frozen => lo == w.
    void validate_against(std::span<const float> weights) const;
};

// KQI file: "KQI1", u64 count, per weight f32 lo, f32 hi, u8 flags (bit0 = frozen).
void save_intervals(const IntervalSet& iv, const std::string& path);
IntervalSet load_intervals(const std::string& path);

} // namespace kq
