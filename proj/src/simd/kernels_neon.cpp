#include "spectral_chroma/simd/kernels.hpp"

#include <arm_neon.h>

namespace spectral_chroma::simd::neon {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void rank2_update(double* row, const double* u, const double* w, double alpha, double beta,
                  std::size_t n) {
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t t = vmulq_n_f64(vld1q_f64(w + j), alpha);
        t = vfmaq_n_f64(t, vld1q_f64(u + j), beta);
        vst1q_f64(row + j, vsubq_f64(vld1q_f64(row + j), t));
    }
    for (; j < n; ++j) row[j] -= alpha * w[j] + beta * u[j];
}

void plane_rotation(double* x, double* y, std::size_t n, double c, double s) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t xi = vld1q_f64(x + i);
        const float64x2_t yi = vld1q_f64(y + i);
        vst1q_f64(x + i, vfmsq_n_f64(vmulq_n_f64(xi, c), yi, s));
        vst1q_f64(y + i, vfmaq_n_f64(vmulq_n_f64(yi, c), xi, s));
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
    const float64x2_t vx0 = vdupq_n_f64(x0);
    const float64x2_t vy0 = vdupq_n_f64(y0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t y = vld1q_f64(ys + i);
        const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vx0);
        const float64x2_t dy = vsubq_f64(y, vy0);
        const float64x2_t num = vfmaq_f64(vmulq_f64(dy, dy), dx, dx);
        vst1q_f64(out + i, vdivq_f64(num, vmulq_n_f64(y, 4.0 * y0)));
    }
    for (; i < n; ++i) {
        const double dx = xs[i] - x0;
        const double dy = ys[i] - y0;
        out[i] = (dx * dx + dy * dy) / (4.0 * y0 * ys[i]);
    }
}

}  // namespace

extern const KernelTable table{Isa::neon, dot, rank2_update, plane_rotation, sinh2_half_distance};

}  // namespace spectral_chroma::simd::neon
