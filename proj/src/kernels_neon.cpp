#if defined(__aarch64__)

#include "kq/kernels.hpp"

#include <arm_neon.h>
#include <cmath>

namespace kq::kernels {
namespace {

float absmax_neon(const float* x, std::size_t n) {
    float32x4_t acc = vdupq_n_f32(0.0f);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = vmaxq_f32(acc, vabsq_f32(vld1q_f32(x + i)));
    }
    float m = vmaxvq_f32(acc);
    for (; i < n; ++i) {
        const float a = std::fabs(x[i]);
        m = (a > m) ? a : m;
    }
    return m;
}

void minmax_neon(const float* x, std::size_t n, float* mn, float* mx) {
    float lo, hi;
    std::size_t i = 0;
    if (n >= 4) {
        float32x4_t vlo = vld1q_f32(x);
        float32x4_t vhi = vlo;
        for (i = 4; i + 4 <= n; i += 4) {
            const float32x4_t v = vld1q_f32(x + i);
            vlo = vminq_f32(vlo, v);
            vhi = vmaxq_f32(vhi, v);
        }
        lo = vminvq_f32(vlo);
        hi = vmaxvq_f32(vhi);
    } else {
        lo = x[0];
        hi = x[0];
        i = 1;
    }
    for (; i < n; ++i) {
        const float v = x[i];
        lo = (v < lo) ? v : lo;
        hi = (v > hi) ? v : hi;
    }
    *mn = lo + 0.0f;
    *mx = hi + 0.0f;
}

void dequant_row_neon(const std::int8_t* q, std::size_t n, float scale, float minv,
                      float* out) {
    const float32x4_t vs = vdupq_n_f32(scale);
    const float32x4_t vm = vdupq_n_f32(minv);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const int16x8_t w = vmovl_s8(vld1_s8(q + i));
        const float32x4_t f0 = vcvtq_f32_s32(vmovl_s16(vget_low_s16(w)));
        const float32x4_t f1 = vcvtq_f32_s32(vmovl_s16(vget_high_s16(w)));
        vst1q_f32(out + i, vsubq_f32(vmulq_f32(f0, vs), vm));
        vst1q_f32(out + i + 4, vsubq_f32(vmulq_f32(f1, vs), vm));
    }
    for (; i < n; ++i) {
        out[i] = static_cast<float>(q[i]) * scale - minv;
    }
}

void clamp_spans_neon(float* v, const float* lo, const float* hi, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float32x4_t t = vmaxq_f32(vld1q_f32(v + i), vld1q_f32(lo + i));
        t = vminq_f32(t, vld1q_f32(hi + i));
        vst1q_f32(v + i, t);
    }
    for (; i < n; ++i) {
        float t = (v[i] > lo[i]) ? v[i] : lo[i];
        v[i] = (t < hi[i]) ? t : hi[i];
    }
}

std::size_t count_neq_neon(const float* a, const float* b, std::size_t n) {
    std::size_t c = 0;
    std::size_t i = 0;
    uint32x4_t acc = vdupq_n_u32(0);
    for (; i + 4 <= n; i += 4) {
        const uint32x4_t eq = vceqq_f32(vld1q_f32(a + i), vld1q_f32(b + i));
        // not-equal lanes contribute 1
        acc = vaddq_u32(acc, vandq_u32(vmvnq_u32(eq), vdupq_n_u32(1)));
    }
    c += vaddvq_u32(acc);
    for (; i < n; ++i) {
        c += (a[i] != b[i]) ? 1 : 0;
    }
    return c;
}

void square_neon(const float* x, float* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float32x4_t v = vld1q_f32(x + i);
        vst1q_f32(out + i, vmulq_f32(v, v));
    }
    for (; i < n; ++i) {
        out[i] = x[i] * x[i];
    }
}

} // namespace

const Ops& neon_ops() {
    static const Ops ops = {
        "neon",        absmax_neon,    minmax_neon,
        dequant_row_neon, clamp_spans_neon, count_neq_neon,
        square_neon,
    };
    return ops;
}

} // namespace kq::kernels

#endif // __aarch64__
