#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kq/types.hpp"

namespace kq {

// Row-major float32 weight container.
struct Tensor {
    std::string name;
    std::vector<std::uint64_t> dims;
    std::vector<float> data;

    std::size_t size() const { return data.size(); }
    // Throws NonFiniteData / Error if dims and data disagree or data has NaN/Inf.
    void validate() const;
};

// 256 weights arranged as m subblocks of n values, row-major.
struct SuperBlock {
    std::array<float, kSuperBlockSize> values{};
    int sub_count = 16; // m
    int sub_len = 16;   // n

    std::span<const float> row(int i) const {
        return {values.data() + static_cast<std::size_t>(i) * sub_len,
                static_cast<std::size_t>(sub_len)};
    }
    std::span<float> row(int i) {
        return {values.data() + static_cast<std::size_t>(i) * sub_len,
                static_cast<std::size_t>(sub_len)};
    }
};

// Splits into consecutive 256-wide superblocks carrying the layout of qt.
// Throws NotMultipleOf256 if size(t) is not a positive multiple of 256.
std::vector<SuperBlock> partition_superblocks(const Tensor& t, QuantType qt);

// Ordered first-match-wins mapping from layer-name glob to type.
struct MixRule {
    std::string pattern;
    QuantType type;
};
struct MixConfig {
    QuantType default_type = QuantType::q4_k;
    std::vector<MixRule> rules;
};

// Glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view name);

QuantType resolve_type(const MixConfig& mix, std::string_view layer_name);

} // namespace kq
