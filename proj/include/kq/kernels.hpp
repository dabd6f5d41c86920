#pragma once

#include <cstddef>
#include <cstdint>

namespace kq::kernels {

// Inner loops with scalar reference implementations and SIMD variants
// selected at runtime. Every variant is bit-identical to the scalar
// reference: only lattice ops (min/max), elementwise maps and comparisons
// are vectorized; order-sensitive float accumulation stays scalar.
struct Ops {
    const char* name;
    // max_i |x_i|; 0 for empty spans.
    float (*absmax)(const float* x, std::size_t n);
    // elementwise min and max; n must be >= 1.
    void (*minmax)(const float* x, std::size_t n, float* mn, float* mx);
    // out_i = q_i * scale - minv
    void (*dequant_row)(const std::int8_t* q, std::size_t n, float scale, float minv, float* out);
    // v_i = clamp(v_i, lo_i, hi_i)
    void (*clamp_spans)(float* v, const float* lo, const float* hi, std::size_t n);
    // number of positions with a_i != b_i (value inequality)
    std::size_t (*count_neq)(const float* a, const float* b, std::size_t n);
    // out_i = x_i * x_i
    void (*square)(const float* x, float* out, std::size_t n);
};

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops(); // callable only if the CPU supports AVX2
#endif
#if defined(__aarch64__)
const Ops& neon_ops();
#endif

// Best supported variant, honoring KQ_SIMD={scalar,avx2,neon} overrides.
const Ops& ops();

} // namespace kq::kernels
