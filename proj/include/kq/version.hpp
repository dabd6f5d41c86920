#pragma once

namespace kq {

inline constexpr const char* kToolVersion = "kq 1.0.0";

} // namespace kq
