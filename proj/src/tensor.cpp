#include "kq/tensor.hpp"

#include <cmath>
#include <cstring>

#include "kq/errors.hpp"

namespace kq {

void Tensor::validate() const {
    std::uint64_t count = 1;
    for (std::uint64_t d : dims) {
        if (d == 0) throw Error("tensor '" + name + "' has a zero dimension");
        count *= d;
    }
    if (dims.empty()) count = 0;
    if (count != data.size()) {
        throw Error("tensor '" + name + "' dims imply " + std::to_string(count) +
                    " elements but data holds " + std::to_string(data.size()));
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!std::isfinite(data[i])) {
            throw NonFiniteData("tensor '" + name + "' has a non-finite value at element " +
                                std::to_string(i));
        }
    }
}

std::vector<SuperBlock> partition_superblocks(const Tensor& t, QuantType qt) {
    const std::size_t n = t.data.size();
    if (n == 0 || n % kSuperBlockSize != 0) {
        throw NotMultipleOf256(n % kSuperBlockSize);
    }
    const KQuantConfig cfg = config_for(qt);
    std::vector<SuperBlock> blocks(n / kSuperBlockSize);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].sub_count = cfg.sub_count;
        blocks[b].sub_len = cfg.sub_len;
        std::memcpy(blocks[b].values.data(), t.data.data() + b * kSuperBlockSize,
                    kSuperBlockSize * sizeof(float));
    }
    return blocks;
}

bool glob_match(std::string_view pattern, std::string_view name) {
    std::size_t p = 0, s = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (s < name.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[s])) {
            ++p;
            ++s;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = s;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            s = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

QuantType resolve_type(const MixConfig& mix, std::string_view layer_name) {
    for (const MixRule& rule : mix.rules) {
        if (glob_match(rule.pattern, layer_name)) return rule.type;
    }
    return mix.default_type;
}

} // namespace kq
