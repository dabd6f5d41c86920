#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kq/tensor.hpp"

namespace kq {

// KQT container: "KQT1", u8 version=1, u8 dtype (0 = float32), u8 ndim,
// ndim x u64 LE dims, row-major f32 LE payload.
Tensor load_tensor(const std::string& path);
void save_tensor(const Tensor& t, const std::string& path);

struct ManifestEntry {
    std::string name;
    std::string file; // resolved relative to the manifest location
    std::optional<QuantType> type;
};
std::vector<ManifestEntry> load_manifest(const std::string& path);

// { "default": "q3_k", "rules": [ { "pattern": glob, "type": "q6_k" }, ... ] }
MixConfig load_mix_config(const std::string& path);

} // namespace kq
