#include "kq/types.hpp"

#include <algorithm>
#include <cctype>

namespace kq {

std::vector<double> default_grid_eps(int steps) {
    std::vector<double> eps;
    eps.reserve(static_cast<std::size_t>(steps));
    if (steps <= 1) {
        eps.push_back(0.0);
        return eps;
    }
    for (int k = 0; k < steps; ++k) {
        eps.push_back(-1.0 + 2.0 * k / (steps - 1));
    }
    return eps;
}

KQuantConfig config_for(QuantType type) {
    KQuantConfig c;
    c.type = type;
    c.grid_eps = default_grid_eps(21);
    switch (type) {
        case QuantType::q2_k:
            c.bits = 2; c.scale_bits = 4; c.use_mins = true;
            c.sub_count = 16; c.sub_len = 16;
            c.importance = ImportanceKind::square;
            c.objective = Objective::l1;
            c.update = UpdateRule::grid;
            break;
        case QuantType::q3_k:
            c.bits = 3; c.scale_bits = 6; c.use_mins = false;
            c.sub_count = 16; c.sub_len = 16;
            c.importance = ImportanceKind::square;
            c.objective = Objective::l2;
            c.update = UpdateRule::replacing;
            break;
        case QuantType::q4_k:
            c.bits = 4; c.scale_bits = 6; c.use_mins = true;
            c.sub_count = 8; c.sub_len = 32;
            c.importance = ImportanceKind::rms_plus_abs;
            c.objective = Objective::l2;
            c.update = UpdateRule::grid;
            break;
        case QuantType::q5_k:
            c.bits = 5; c.scale_bits = 6; c.use_mins = true;
            c.sub_count = 8; c.sub_len = 32;
            c.importance = ImportanceKind::rms_plus_abs;
            c.objective = Objective::l2;
            c.update = UpdateRule::grid;
            break;
        case QuantType::q6_k:
            c.bits = 6; c.scale_bits = 8; c.use_mins = false;
            c.sub_count = 16; c.sub_len = 16;
            c.importance = ImportanceKind::square;
            c.objective = Objective::l2;
            c.update = UpdateRule::grid;
            break;
    }
    return c;
}

const char* quant_type_name(QuantType type) {
    switch (type) {
        case QuantType::q2_k: return "q2_k";
        case QuantType::q3_k: return "q3_k";
        case QuantType::q4_k: return "q4_k";
        case QuantType::q5_k: return "q5_k";
        case QuantType::q6_k: return "q6_k";
    }
    return "?";
}

std::optional<QuantType> parse_quant_type(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    for (QuantType t : kAllQuantTypes) {
        if (s == quant_type_name(t)) return t;
    }
    return std::nullopt;
}

} // namespace kq
