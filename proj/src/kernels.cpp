#include "kq/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace kq::kernels {
namespace {

const Ops& pick() {
    if (const char* env = std::getenv("KQ_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
        if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2")) return avx2_ops();
#endif
#if defined(__aarch64__)
        if (std::strcmp(env, "neon") == 0) return neon_ops();
#endif
        return scalar_ops();
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return avx2_ops();
#endif
#if defined(__aarch64__)
    return neon_ops();
#endif
    return scalar_ops();
}

} // namespace

const Ops& ops() {
    static const Ops& selected = pick();
    return selected;
}

} // namespace kq::kernels
