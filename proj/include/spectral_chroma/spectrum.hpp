#pragma once

#include <cstddef>
#include <vector>

#include "spectral_chroma/geometry.hpp"
#include "spectral_chroma/spherical.hpp"

// Numerical range data of A_r: scanned infimum over the principal series,
// the certified floor over all of W(A_r), and a direct check that spherical
// functions are eigenfunctions of circle averaging.

namespace spectral_chroma::spectrum {

struct SpectrumSummary {
    double r = 0.0;
    /// Top of the spectrum on a finite-covolume quotient: the constant function
    /// is an eigenfunction with eigenvalue 1. Assigned, never scanned.
    double M = 1.0;
    /// Minimum of P_{-1/2+is}(cosh r) over the scanned, locally refined grid.
    /// Numerical, not certified: the tail s > s_max_scanned is not covered.
    double m_numeric = 0.0;
    /// -(r+1) e^{-r/2}; certified lower bound for every element of W(A_r).
    double m_analytic = 0.0;
    double argmin_s = 0.0;
    double s_max_scanned = 0.0;
    double grid_step = 0.0;
    std::size_t grid_points = 0;
    /// envelope(r) is below the quadrature tolerance; m_numeric is reported as 0.
    bool degenerate = false;
};

struct GridSample {
    double s;
    double value;
};

struct ScanOptions {
    /// 0 selects default_s_max(r).
    double s_max = 0.0;
    double grid_step = 0.05;
    spherical::QuadratureSpec quad{};
    /// Tolerance on s for golden-section refinement of the minimum.
    double refine_tol = 1e-9;
    /// Worker threads for the grid sweep; 0 uses hardware concurrency.
    unsigned threads = 1;
};

/// max(100, 40 / r).
double default_s_max(double r);

/// Scans s in {0, step, 2 step, ...} up to s_max, then refines the smallest
/// grid value by golden-section search on its neighbouring cells. When
/// `grid` is non-null it receives every grid sample in ascending s.
/// Throws DomainError for r <= 0, step <= 0 or s_max < 1; propagates
/// quadrature errors.
SpectrumSummary scan_principal(double r, const ScanOptions& options = {},
                               std::vector<GridSample>* grid = nullptr);

/// -envelope(r): lower bound for all of W(A_r), since complementary-series
/// values are positive.
double full_range_floor(double r);

/// |mean_j phi(circle_point(base, r, 2 pi j / n)) - P(r) phi(base)| with
/// phi(z) = eval(param, d(z, i)). Requires n_points >= 8.
double verify_eigenfunction(const spherical::SpectralParameter& param, double r,
                            const geometry::Point& base, std::size_t n_points,
                            const spherical::QuadratureSpec& quad = {});

}  // namespace spectral_chroma::spectrum
