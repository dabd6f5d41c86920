#pragma once

#include <span>
#include <string>
#include <vector>

#include "kq/interval_set.hpp"

namespace kq::zeroshot {

// Nearest-level quantization table, normalized to [-1, 1].
// 16 levels for NF4; FP4's sign-magnitude encoding collapses +/-0 so its
// table carries 15 distinct levels.
struct Codebook {
    std::string name;
    std::vector<float> levels; // strictly increasing, exactly one zero

    int zero_index() const;
    // Throws Error when the level table is malformed.
    void validate() const;
};

const Codebook& nf4_codebook();
const Codebook& fp4_codebook();
// JSON file { "name": string, "levels": [floats] }.
Codebook load_codebook(const std::string& path);

struct ZeroShotQuantized {
    int group_len = 0;
    float d = 0.0f;             // per-group scale, >= 0; 0 only for all-zero groups
    std::vector<int> codes;
};

// Evenly spaced absmax quantization: d = max|x| / (2^(bits-1) - 1),
// codes = round(x/d) in [-(2^(bits-1)-1), 2^(bits-1)-1].
ZeroShotQuantized absmax_quantize(std::span<const float> group, int bits);

// Nearest codebook level of x / max|x|; ties go to the lower index.
ZeroShotQuantized codebook_quantize(std::span<const float> group, const Codebook& cb,
                                    int expected_len = 64);

// Exact quantization-preserving intervals (scale held fixed). The absmax
// element is frozen; every other interval is the half-step band around the
// dequantized value.
IntervalSet exact_intervals_evenly_spaced(std::span<const float> group, int bits);

// Voronoi cells of the codebook levels scaled by d, clipped at +/-d;
// the absmax element is frozen.
IntervalSet exact_intervals_codebook(std::span<const float> group, const Codebook& cb);

} // namespace kq::zeroshot
