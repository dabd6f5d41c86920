#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kq/tensor.hpp"
#include "kq/types.hpp"

namespace kq {

// Result of optimizing one subblock: the affine parameters and the weighted
// objective of the fit.
struct SubblockFit {
    double scale = 0.0;
    double minv = 0.0;
    double weighted_error = 0.0;
};

// Quantized superblock. Mins are stored negated (nonnegative), so
// dequantization is q * (d_scales * scale_code) - d_mins * min_code.
struct QuantizedSuperBlock {
    QuantType type = QuantType::q4_k;
    float d_scales = 0.0f;
    float d_mins = 0.0f;
    std::array<std::uint8_t, 16> scale_codes{}; // first m entries used
    std::array<std::uint8_t, 16> min_codes{};
    std::array<std::int8_t, kSuperBlockSize> codes{};

    int sub_count() const;
    int sub_len() const;
    float row_scale(int i) const { return d_scales * static_cast<float>(scale_codes[i]); }
    float row_stored_min(int i) const { return d_mins * static_cast<float>(min_codes[i]); }
};

// Counters for regression outputs clamped during parameter storage.
struct QuantizeDiagnostics {
    std::uint64_t negative_scale_clamps = 0;
    std::uint64_t positive_min_clamps = 0;
    QuantizeDiagnostics& operator+=(const QuantizeDiagnostics& o) {
        negative_scale_clamps += o.negative_scale_clamps;
        positive_min_clamps += o.positive_min_clamps;
        return *this;
    }
};

using ImportanceMatrix = std::array<double, kSuperBlockSize>;

// Per-element importance: square kind w = x^2; rms_plus_abs kind
// w = sqrt(mean of x^2 over the subblock) + |x|.
ImportanceMatrix calc_importance(const SuperBlock& block, const KQuantConfig& cfg);

struct AffineBase {
    double scale = 0.0;
    double minv = 0.0;
    std::vector<int> codes;
};

// Zero-shot affine baseline. Min-bearing: Min = min(x),
// Scale = (max - min)/(2^N - 1). Min-less: Min = 0,
// Scale = max|x|/(2^(N-1) - 1). Constant subblocks give Scale = 0, Q = 0.
AffineBase affine_quant_base(std::span<const float> x, const KQuantConfig& cfg);

// Closed-form weighted least squares of x against codes q.
// with_min == false returns (sum w x q / sum w q^2, 0).
// Throws DegenerateRegression when the denominator vanishes.
std::pair<double, double> regression_scale_min(std::span<const float> x,
                                               std::span<const double> w,
                                               std::span<const int> q,
                                               bool with_min);

// Weighted objective of the dequantized codes against x.
double weighted_error(std::span<const float> x, std::span<const double> w,
                      std::span<const int> q, double scale, double minv,
                      Objective objective);

// Inverse scale used by the grid update rule:
// min-bearing (2^N - 1 + eps) / (max - min); min-less (2^(N-1) - 1 + eps) / absmax.
double grid_inverse_scale(const KQuantConfig& cfg, double eps, double lo, double hi);

// Subblock optimization: affine base, then grid or replacing updates,
// accepting only strict error improvements. The returned error never
// exceeds the base error.
SubblockFit quantize_subblock(std::span<const float> x, std::span<const double> w,
                              const KQuantConfig& cfg);

QuantizedSuperBlock quantize_superblock(const SuperBlock& block, const KQuantConfig& cfg,
                                        QuantizeDiagnostics* diag = nullptr);

// Same storage pipeline but with plain affine subblock fits (no optimization).
QuantizedSuperBlock affine_baseline_superblock(const SuperBlock& block, const KQuantConfig& cfg,
                                               QuantizeDiagnostics* diag = nullptr);

SuperBlock dequantize_superblock(const QuantizedSuperBlock& q);

// Weighted objective of a stored block's dequantization against X under
// cfg.objective and cfg.importance.
double superblock_objective(const SuperBlock& block, const KQuantConfig& cfg,
                            const QuantizedSuperBlock& q);

// Canonical per-block payload: f32 d_scales, f32 d_mins, m u8 scale codes,
// m u8 min codes, 256 i8 weight codes. Little-endian.
std::vector<std::uint8_t> pack_block(const QuantizedSuperBlock& q);
QuantizedSuperBlock unpack_block(std::span<const std::uint8_t> bytes, QuantType type);
std::size_t packed_block_size(QuantType type);

// KQB file: "KQB1", u8 type code, u64 LE block count, packed blocks.
void save_blocks(const std::string& path, std::span<const QuantizedSuperBlock> blocks);
std::vector<QuantizedSuperBlock> load_blocks(const std::string& path);

// Partition + quantize, parallel over superblocks, output in block order.
std::vector<QuantizedSuperBlock> quantize_tensor(const Tensor& t, const KQuantConfig& cfg,
                                                 QuantizeDiagnostics* diag = nullptr);

std::vector<float> dequantize_blocks(std::span<const QuantizedSuperBlock> blocks);

} // namespace kq
