// Compiled with -mavx2 -mfma. Only reached through kernels_for() after a
// runtime CPU check, so nothing here may run on a machine without AVX2.
#include "spectral_chroma/simd/kernels.hpp"

#include <immintrin.h>

namespace spectral_chroma::simd::avx2 {
namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void rank2_update(double* row, const double* u, const double* w, double alpha, double beta,
                  std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d t = _mm256_fmadd_pd(vb, _mm256_loadu_pd(u + j),
                                          _mm256_mul_pd(va, _mm256_loadu_pd(w + j)));
        _mm256_storeu_pd(row + j, _mm256_sub_pd(_mm256_loadu_pd(row + j), t));
    }
    for (; j < n; ++j) row[j] -= alpha * w[j] + beta * u[j];
}

void plane_rotation(double* x, double* y, std::size_t n, double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d yi = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_fmsub_pd(vc, xi, _mm256_mul_pd(vs, yi)));
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, xi, _mm256_mul_pd(vc, yi)));
    }
    for (; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void sinh2_half_distance(const double* xs, const double* ys, std::size_t n, double x0, double y0,
                         double* out) {
    const __m256d vx0 = _mm256_set1_pd(x0);
    const __m256d vy0 = _mm256_set1_pd(y0);
    const __m256d four_y0 = _mm256_set1_pd(4.0 * y0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d y = _mm256_loadu_pd(ys + i);
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vx0);
        const __m256d dy = _mm256_sub_pd(y, vy0);
        const __m256d num = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(dy, dy));
        _mm256_storeu_pd(out + i, _mm256_div_pd(num, _mm256_mul_pd(four_y0, y)));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - x0;
        const double dy = ys[i] - y0;
        out[i] = (dx * dx + dy * dy) / (4.0 * y0 * ys[i]);
    }
}

}  // namespace

extern const KernelTable table{Isa::avx2, dot, rank2_update, plane_rotation, sinh2_half_distance};

}  // namespace spectral_chroma::simd::avx2
