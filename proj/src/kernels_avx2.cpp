#if defined(__x86_64__) || defined(_M_X64)

#include "kq/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace kq::kernels {
namespace {

inline float hmax_ps(__m256 v) {
    __m128 x = _mm_max_ps(_mm256_castps256_ps128(v), _mm256_extractf128_ps(v, 1));
    x = _mm_max_ps(x, _mm_movehl_ps(x, x));
    x = _mm_max_ss(x, _mm_movehdup_ps(x));
    return _mm_cvtss_f32(x);
}

inline float hmin_ps(__m256 v) {
    __m128 x = _mm_min_ps(_mm256_castps256_ps128(v), _mm256_extractf128_ps(v, 1));
    x = _mm_min_ps(x, _mm_movehl_ps(x, x));
    x = _mm_min_ss(x, _mm_movehdup_ps(x));
    return _mm_cvtss_f32(x);
}

float absmax_avx2(const float* x, std::size_t n) {
    const __m256 mask = _mm256_castsi256_ps(_mm256_set1_epi32(0x7FFFFFFF));
    __m256 acc = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 a = _mm256_and_ps(_mm256_loadu_ps(x + i), mask);
        acc = _mm256_max_ps(acc, a);
    }
    float m = hmax_ps(acc);
    for (; i < n; ++i) {
        const float a = std::fabs(x[i]);
        m = (a > m) ? a : m;
    }
    return m;
}

void minmax_avx2(const float* x, std::size_t n, float* mn, float* mx) {
    float lo, hi;
    std::size_t i = 0;
    if (n >= 8) {
        __m256 vlo = _mm256_loadu_ps(x);
        __m256 vhi = vlo;
        for (i = 8; i + 8 <= n; i += 8) {
            const __m256 v = _mm256_loadu_ps(x + i);
            vlo = _mm256_min_ps(vlo, v);
            vhi = _mm256_max_ps(vhi, v);
        }
        lo = hmin_ps(vlo);
        hi = hmax_ps(vhi);
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

void dequant_row_avx2(const std::int8_t* q, std::size_t n, float scale, float minv,
                      float* out) {
    const __m256 vs = _mm256_set1_ps(scale);
    const __m256 vm = _mm256_set1_ps(minv);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m128i bytes = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(q + i));
        const __m256 f = _mm256_cvtepi32_ps(_mm256_cvtepi8_epi32(bytes));
        _mm256_storeu_ps(out + i, _mm256_sub_ps(_mm256_mul_ps(f, vs), vm));
    }
    for (; i < n; ++i) {
        out[i] = static_cast<float>(q[i]) * scale - minv;
    }
}

void clamp_spans_avx2(float* v, const float* lo, const float* hi, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 t = _mm256_max_ps(_mm256_loadu_ps(v + i), _mm256_loadu_ps(lo + i));
        t = _mm256_min_ps(t, _mm256_loadu_ps(hi + i));
        _mm256_storeu_ps(v + i, t);
    }
    for (; i < n; ++i) {
        float t = (v[i] > lo[i]) ? v[i] : lo[i];
        v[i] = (t < hi[i]) ? t : hi[i];
    }
}

std::size_t count_neq_avx2(const float* a, const float* b, std::size_t n) {
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 cmp =
            _mm256_cmp_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), _CMP_NEQ_UQ);
        c += static_cast<std::size_t>(_mm_popcnt_u32(
            static_cast<unsigned>(_mm256_movemask_ps(cmp))));
    }
    for (; i < n; ++i) {
        c += (a[i] != b[i]) ? 1 : 0;
    }
    return c;
}

void square_avx2(const float* x, float* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 v = _mm256_loadu_ps(x + i);
        _mm256_storeu_ps(out + i, _mm256_mul_ps(v, v));
    }
    for (; i < n; ++i) {
        out[i] = x[i] * x[i];
    }
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        "avx2",        absmax_avx2,    minmax_avx2,
        dequant_row_avx2, clamp_spans_avx2, count_neq_avx2,
        square_avx2,
    };
    return ops;
}

} // namespace kq::kernels

#endif // x86_64
