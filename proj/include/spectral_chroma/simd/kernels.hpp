#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops used by quadrature, the dense eigensolvers and
// circle averaging. Every kernel has a scalar reference implementation; wider
// variants are selected once at runtime from what the CPU reports.
//
// The environment variable SPECTRAL_CHROMA_SIMD=scalar forces the reference
// path (useful for bisecting numerical differences).

namespace spectral_chroma::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;

    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    // row[j] -= alpha * w[j] + beta * u[j]
    void (*rank2_update)(double* row, const double* u, const double* w, double alpha, double beta,
                         std::size_t n);

    // (x, y) <- (c x - s y, s x + c y), elementwise
    void (*plane_rotation)(double* x, double* y, std::size_t n, double c, double s);

    // out[i] = ((xs[i]-x0)^2 + (ys[i]-y0)^2) / (4 ys[i] y0), i.e. sinh^2(d/2)
    // for the hyperbolic distance d between (xs[i], ys[i]) and (x0, y0).
    void (*sinh2_half_distance)(const double* xs, const double* ys, std::size_t n, double x0,
                                double y0, double* out);
};

const KernelTable& scalar_kernels() noexcept;

/// Variant for `isa` if it was compiled in and the CPU supports it, else nullptr.
const KernelTable* kernels_for(Isa isa) noexcept;

/// The table picked for this process (first call decides).
const KernelTable& active() noexcept;

inline double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline void rank2_update(std::span<double> row, std::span<const double> u,
                         std::span<const double> w, double alpha, double beta) noexcept {
    active().rank2_update(row.data(), u.data(), w.data(), alpha, beta, row.size());
}

inline void plane_rotation(std::span<double> x, std::span<double> y, double c, double s) noexcept {
    active().plane_rotation(x.data(), y.data(), x.size(), c, s);
}

inline void sinh2_half_distance(std::span<const double> xs, std::span<const double> ys, double x0,
                                double y0, std::span<double> out) noexcept {
    active().sinh2_half_distance(xs.data(), ys.data(), out.size(), x0, y0, out.data());
}

}  // namespace spectral_chroma::simd
