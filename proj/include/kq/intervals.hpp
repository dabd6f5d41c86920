#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "kq/interval_set.hpp"
#include "kq/kquant.hpp"
#include "kq/rng.hpp"
#include "kq/tensor.hpp"

namespace kq {

// Which parameters stay pinned while intervals are derived.
enum class FreezeStrategy : std::uint8_t {
    base = 0,     // nothing frozen
    maxmin = 1,   // per-subblock extrema
    subblock = 2, // subblocks that pin the double-quantization scales
    both = 3,     // union of the two
};

const char* freeze_strategy_name(FreezeStrategy s);
std::optional<FreezeStrategy> parse_freeze_strategy(std::string_view name);

// Flat indices (into the 256-wide block) frozen under strategy s.
// maxmin freezes the argmax and argmin of every subblock; subblock freezes
// every element of the subblock whose stored scale attains the maximum
// (and, for min-bearing types, of the one whose stored min does).
// Ties break toward the lowest index.
std::vector<int> compute_freeze_mask(const SuperBlock& block, const QuantizedSuperBlock& q,
                                     FreezeStrategy s);

// Error-based intervals for one superblock: frozen weights get zero width,
// all others span between the weight and its dequantized value.
IntervalSet error_based_intervals(const SuperBlock& block, const QuantizedSuperBlock& q,
                                  std::span<const int> frozen_mask);

// Heuristic widening. Per subblock, with I the interval width and I_max the
// largest width in the subblock:
//   I >= lambda*I_max                 -> unchanged
//   lambda*I_max/2 <= I < lambda*I_max -> grow the weight side to lambda*I_max - I
//   I < lambda*I_max/2                -> symmetric lambda*I_max/2 around the weight
// Frozen weights never expand; lambda = 0 is the identity.
IntervalSet expand_intervals(const IntervalSet& iv, std::span<const float> weights,
                             double lambda, int sub_len);

// Per-weight intersection: lo = max of lows, hi = min of highs; an empty or
// frozen result collapses to zero width at the weight.
IntervalSet intersect_intervals(std::span<const IntervalSet> sets,
                                std::span<const float> weights);

// Elementwise clamp of t into iv. Idempotent; frozen weights are restored
// bit-exactly.
Tensor project_weights(const Tensor& t, const IntervalSet& iv);

// Tensor-level interval derivation (partition, quantize, freeze, error
// intervals, optional expansion), parallel over superblocks.
IntervalSet derive_intervals(const Tensor& t, const KQuantConfig& cfg, FreezeStrategy s,
                             double lambda = 0.0);

struct OverApproxReport {
    int trials = 0;
    double changed_fraction = 0.0;
    std::uint64_t seed = 0;
    QuantType type = QuantType::q4_k;
};

// Draws uniform noise inside each interval, re-quantizes, and reports the
// mean fraction of weights whose dequantized value changed (exact float
// inequality). Deterministic given the seed.
OverApproxReport overapprox_fraction(const Tensor& t, const IntervalSet& iv,
                                     const KQuantConfig& cfg, int trials,
                                     std::uint64_t seed);

struct IntervalStats {
    double nonzero_fraction = 0.0;
    double mean_nonzero_width = 0.0;
    std::vector<double> histogram_edges;  // fixed log-spaced
    std::vector<std::uint64_t> histogram_counts;
};

IntervalStats interval_stats(const IntervalSet& iv);

// Adds N(0, sigma^2) noise, re-quantizes, and reports the mean changed
// fraction of dequantized values over trials. The unit normal draws depend
// only on (seed, trial), so sigma sweeps reuse the same noise directions.
double noise_defense_eval(const Tensor& t, const KQuantConfig& cfg, double sigma,
                          int trials, std::uint64_t seed);

// Two-weight L1 toy: perturbations inside error-based intervals strictly
// improve the error at the old representative, yet the optimizer moves.
struct NonSoundnessToy {
    std::array<double, 2> x{-1.0, 1.0};
    double q0 = 0.0;
    double err_x_at_q0 = 0.0;       // 1.0
    std::array<double, 2> x_star{-0.2, 0.4};
    bool x_star_inside = false;
    double err_xstar_at_q0 = 0.0;   // 0.3
    double q_new = 0.0;             // brute-force argmin over [-1, 1]
    double err_at_q_new = 0.0;
};

NonSoundnessToy nonsoundness_toy();

} // namespace kq
