#include "kq/kernels.hpp"

#include <cmath>

// Scalar reference kernels. The SIMD variants must match these bit for bit:
// elementwise ops share the exact operation order, and min/max results are
// canonicalized with "+ 0.0f" so a -0/+0 tie cannot leak schedule-dependent
// sign bits out of the reductions.

namespace kq::kernels {
namespace {

float absmax_scalar(const float* x, std::size_t n) {
    float m = 0.0f;
    for (std::size_t i = 0; i < n; ++i) {
        const float a = std::fabs(x[i]);
        m = (a > m) ? a : m;
    }
    return m;
}

void minmax_scalar(const float* x, std::size_t n, float* mn, float* mx) {
    float lo = x[0];
    float hi = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        const float v = x[i];
        lo = (v < lo) ? v : lo;
        hi = (v > hi) ? v : hi;
    }
    *mn = lo + 0.0f;
    *mx = hi + 0.0f;
}

void dequant_row_scalar(const std::int8_t* q, std::size_t n, float scale, float minv,
                        float* out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<float>(q[i]) * scale - minv;
    }
}

void clamp_spans_scalar(float* v, const float* lo, const float* hi, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        float t = (v[i] > lo[i]) ? v[i] : lo[i];
        v[i] = (t < hi[i]) ? t : hi[i];
    }
}

std::size_t count_neq_scalar(const float* a, const float* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        c += (a[i] != b[i]) ? 1 : 0;
    }
    return c;
}

void square_scalar(const float* x, float* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x[i] * x[i];
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",       absmax_scalar,    minmax_scalar,
        dequant_row_scalar, clamp_spans_scalar, count_neq_scalar,
        square_scalar,
    };
    return ops;
}

} // namespace kq::kernels
