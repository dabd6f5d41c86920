#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kq {

inline constexpr int kSuperBlockSize = 256;

enum class QuantType : std::uint8_t {
    q2_k = 0,
    q3_k = 1,
    q4_k = 2,
    q5_k = 3,
    q6_k = 4,
};

inline constexpr int kNumQuantTypes = 5;

inline constexpr std::array<QuantType, kNumQuantTypes> kAllQuantTypes = {
    QuantType::q2_k, QuantType::q3_k, QuantType::q4_k, QuantType::q5_k, QuantType::q6_k,
};

enum class ImportanceKind : std::uint8_t {
    square,       // w_ij = x_ij^2
    rms_plus_abs, // w_ij = sqrt(mean_j x_ij^2) + |x_ij|, per subblock
};

enum class Objective : std::uint8_t { l1, l2 };

enum class UpdateRule : std::uint8_t { grid, replacing };

// Per-type parameters of the superblock quantizer. The table values for the
// five base types are locked; grid_eps / replace_passes are tunable.
struct KQuantConfig {
    QuantType type = QuantType::q4_k;
    int bits = 4;        // bitwidth of the weight codes
    int scale_bits = 6;  // bitwidth of the scale/min codes
    bool use_mins = false;
    int sub_count = 8;   // m: subblocks per superblock
    int sub_len = 32;    // n: weights per subblock, m*n == 256
    ImportanceKind importance = ImportanceKind::square;
    Objective objective = Objective::l2;
    UpdateRule update = UpdateRule::grid;
    std::vector<double> grid_eps; // scale-grid offsets, default linspace(-1, 1, 21)
    int replace_passes = 1;

    int code_min() const { return use_mins ? 0 : -(1 << (bits - 1)); }
    int code_max() const { return use_mins ? (1 << bits) - 1 : (1 << (bits - 1)) - 1; }
    // Divisor of the base scale: full level count minus one for min-bearing
    // types, the positive half otherwise.
    int level_span() const { return use_mins ? (1 << bits) - 1 : (1 << (bits - 1)) - 1; }
    int scale_code_max() const { return (1 << scale_bits) - 1; }
};

// Canonical configuration for a type (grid_eps filled with the default grid).
KQuantConfig config_for(QuantType type);

// linspace(-1, 1, steps); steps == 1 yields {0}.
std::vector<double> default_grid_eps(int steps);

const char* quant_type_name(QuantType type);
std::optional<QuantType> parse_quant_type(std::string_view name);

} // namespace kq
