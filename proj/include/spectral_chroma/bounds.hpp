#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "spectral_chroma/graph.hpp"
#include "spectral_chroma/spectrum.hpp"

// Hoffman-type bounds: the finite ratio bound on graphs, its operator
// generalization with an approximate eigenvector, and the resulting
// independence-ratio / measurable chromatic number bounds for the
// distance-r graph of a finite-area hyperbolic surface.

namespace spectral_chroma::bounds {

enum class Provenance { certified_analytic, numerical_scan, formula };
std::string_view to_string(Provenance p) noexcept;

struct GraphSpectrumResult {
    std::size_t n = 0;
    std::size_t edges = 0;
    bool regular = false;
    double M = 0.0;  ///< largest adjacency eigenvalue
    double m = 0.0;  ///< smallest adjacency eigenvalue
    double alpha_bound = 0.0;
    double chi_bound = 0.0;
};

/// alpha <= -m / (M - m), chi >= (M - m) / (-m) from a dense eigensolve of
/// the adjacency matrix. Throws DegenerateInput for edgeless graphs,
/// DomainError for n above the dense limit, and PreconditionViolation when
/// require_regular is set but degrees differ.
GraphSpectrumResult hoffman_finite(const Graph& graph, bool require_regular = false);

struct HoffmanInputs {
    double M;        ///< sup of the numerical range
    double m;        ///< inf of the numerical range
    double R;        ///< approximate eigenvalue of the indicator of X
    double epsilon;  ///< || A 1_X - R 1_X ||

    /// Throws DomainError unless m <= M and epsilon >= 0 (all finite).
    void validate() const;
};

struct OperatorBound {
    double alpha_bound;
    double chi_bound;
    bool alpha_vacuous;  ///< alpha_bound > 1
    bool chi_vacuous;    ///< chi_bound < 1
};

/// alpha <= (-m + 2 eps) / (R - m - eps) and chi >= (M - m) / (-m).
/// Throws PreconditionViolation when R - m - eps <= 0 or m >= 0.
OperatorBound hoffman_operator(const HoffmanInputs& inputs);

enum class Winner { main_theorem, nevo, tie };
std::string_view to_string(Winner w) noexcept;

struct NevoBeta {
    double beta;
    double alpha_bound;  ///< beta / (1 + beta)
};

/// Operator norm estimate of A_r on the orthogonal complement of constants
/// from the spectral gap lambda, and the resulting independence bound.
/// lambda >= 1/4: min{(r/2) e^{-r/2}, (1 + |1+4 lambda|^{-1/2}) e^{-r/2}}.
/// lambda < 1/4: min{(r/2) e^{-C r/2}, |1+4 lambda|^{-1/2} e^{-C r/2}} where C
/// must be supplied in [0, 1). Throws DomainError for lambda <= 0, a missing
/// or out-of-range C, or r <= 0.
NevoBeta nevo_beta(double r, double lambda, std::optional<double> c_exponent = std::nullopt);

struct NevoComparison {
    double lambda;
    std::optional<double> c_exponent;
    double beta;
    double alpha_bound;
    Winner winner;
};

struct BoundReport {
    double r = 0.0;
    /// Hoffman value -m / (1 - m) with M = R = 1, epsilon = 0; equals
    /// (r+1)e^{-r/2} / (1 + (r+1)e^{-r/2}) for the certified m.
    double ind_ratio_exact = 0.0;
    /// (r + 1) e^{-r/2}
    double ind_ratio_relaxed = 0.0;
    /// e^{r/2} / (r + 1)
    double chi_lower = 0.0;
    /// 5 (ceil(r / ln 4) + 1), present only for r > 5.
    std::optional<double> pp_chi_upper;
    std::optional<NevoComparison> nevo;

    double m_used = 0.0;
    Provenance m_provenance = Provenance::certified_analytic;
    bool ind_ratio_exact_vacuous = false;
    bool ind_ratio_relaxed_vacuous = false;
    bool chi_lower_vacuous = false;
};

/// Explicit upper bound 5 (ceil(r / ln 4) + 1) on the chromatic number of the
/// distance-r graph of the hyperbolic plane, valid for r > 5.
std::optional<double> parlier_petit_upper(double r);

/// Main bounds at radius r. By default m = -(r+1) e^{-r/2} (certified); with
/// use_scanned_m the summary's m_numeric is used instead and labeled
/// numerical_scan. Throws DomainError for r <= 0 or a summary for another r,
/// and when use_scanned_m is set without a summary.
BoundReport main_bounds(double r, bool use_scanned_m = false,
                        const spectrum::SpectrumSummary* summary = nullptr);

/// main_bounds plus, when lambda is given, the spectral-gap comparison.
/// Ties are declared when the two independence bounds differ by <= 1e-12.
BoundReport compare(double r, std::optional<double> lambda = std::nullopt,
                    std::optional<double> c_exponent = std::nullopt);

}  // namespace spectral_chroma::bounds
