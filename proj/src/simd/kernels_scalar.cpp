#include "spectral_chroma/simd/kernels.hpp"

namespace spectral_chroma::simd {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void rank2_update_scalar(double* row, const double* u, const double* w, double alpha, double beta,
                         std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) row[j] -= alpha * w[j] + beta * u[j];
}

void plane_rotation_scalar(double* x, double* y, std::size_t n, double c, double s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

void sinh2_half_distance_scalar(const double* xs, const double* ys, std::size_t n, double x0,
                                double y0, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x0;
        const double dy = ys[i] - y0;
        out[i] = (dx * dx + dy * dy) / (4.0 * ys[i] * y0);
    }
}

constexpr KernelTable kScalar{Isa::scalar, dot_scalar, rank2_update_scalar, plane_rotation_scalar,
                              sinh2_half_distance_scalar};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace spectral_chroma::simd
