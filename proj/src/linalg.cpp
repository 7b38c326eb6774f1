#include "spectral_chroma/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/simd/kernels.hpp"

namespace spectral_chroma::linalg {

void householder_tridiagonalize(std::span<double> a, std::size_t n, std::vector<double>& diag,
                                std::vector<double>& offdiag) {
    diag.assign(n, 0.0);
    offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
    if (n == 0) return;
    std::vector<double> v(n);
    std::vector<double> w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        const std::size_t m = n - k - 1;
        const std::span<double> below = a.subspan(k * n + k + 1, m);  // row k, right of diagonal

        const double norm = std::sqrt(simd::dot(below, below));
        diag[k] = a[k * n + k];
        if (norm == 0.0) {
            offdiag[k] = 0.0;
            continue;
        }
        const double alpha = below[0] > 0.0 ? -norm : norm;
        std::copy(below.begin(), below.end(), v.begin());
        v[0] -= alpha;
        const double vv = simd::dot(std::span<const double>(v.data(), m), std::span<const double>(v.data(), m));
        offdiag[k] = alpha;
        if (vv == 0.0) continue;
        const double tau = 2.0 / vv;

        const std::span<const double> vs(v.data(), m);
        for (std::size_t i = 0; i < m; ++i)
            w[i] = tau * simd::dot(a.subspan((k + 1 + i) * n + k + 1, m), vs);
        const double kappa = 0.5 * tau * simd::dot(std::span<const double>(w.data(), m), vs);
        for (std::size_t i = 0; i < m; ++i) w[i] -= kappa * v[i];

        const std::span<const double> ws(w.data(), m);
        for (std::size_t i = 0; i < m; ++i)
            simd::rank2_update(a.subspan((k + 1 + i) * n + k + 1, m), vs, ws, v[i], w[i]);
    }
    if (n >= 2) {
        diag[n - 2] = a[(n - 2) * n + n - 2];
        offdiag[n - 2] = a[(n - 1) * n + n - 2];
    }
    diag[n - 1] = a[(n - 1) * n + n - 1];
}

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> offdiag) {
    const auto n = static_cast<std::ptrdiff_t>(d.size());
    std::vector<double> e(d.size(), 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (std::ptrdiff_t l = 0; l < n; ++l) {
        int iter = 0;
        std::ptrdiff_t m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) throw Error("implicit QL did not converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            std::ptrdiff_t i = m - 1;
            for (; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double total = 0.0;
    for (double x : a) total += x * x;
    if (total == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off <= eps * eps * total) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;
                simd::plane_rotation(std::span<double>(a.data() + p * n, n),
                                     std::span<double>(a.data() + q * n, n), c, s);
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    throw Error("Jacobi eigenvalue iteration did not converge");
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::span<const double> matrix, std::size_t n,
                                          EigenMethod method) {
    if (matrix.size() != n * n) throw DomainError("matrix size does not match n*n");
    if (n > kMaxDenseDimension)
        throw DomainError("dense eigensolve limited to n <= " + std::to_string(kMaxDenseDimension));
    if (n == 0) return {};
    std::vector<double> a(matrix.begin(), matrix.end());
    if (method == EigenMethod::jacobi) return jacobi_eigenvalues(std::move(a), n);
    std::vector<double> diag;
    std::vector<double> offdiag;
    householder_tridiagonalize(a, n, diag, offdiag);
    return tridiagonal_eigenvalues(std::move(diag), std::move(offdiag));
}

}  // namespace spectral_chroma::linalg
