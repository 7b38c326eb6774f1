#pragma once

#include <cstddef>

// Spherical functions of the hyperbolic plane: the eigenvalue
// P_{-1/2+is}(cosh r) of the circle-averaging operator A_r, via the
// Mehler-Dirichlet integral, plus an ODE-based cross-check and the
// (r+1)e^{-r/2} envelope.

namespace spectral_chroma::spherical {

enum class Series { principal, complementary };

/// A point of the unitary dual. Principal: 1/2 + is with s real.
/// Complementary: is = sigma with |sigma| <= 1/2 (sigma = 1/2 is the trivial
/// representation). The stored value is |s| (resp. |sigma|), since the
/// spherical function is even in it; the input sign is kept as metadata.
class SpectralParameter {
public:
    static SpectralParameter principal(double s);
    static SpectralParameter complementary(double sigma);

    Series series() const noexcept { return series_; }
    double value() const noexcept { return value_; }
    int original_sign() const noexcept { return sign_; }

    /// Coefficient k in u'' + coth(t) u' + k u = 0: s^2 + 1/4 or 1/4 - sigma^2.
    /// Equals the Laplacian eigenvalue attached to the parameter.
    double radial_coefficient() const noexcept;

    friend bool operator==(const SpectralParameter&, const SpectralParameter&) = default;

private:
    SpectralParameter(Series series, double value, int sign) noexcept
        : series_(series), value_(value), sign_(sign) {}

    Series series_;
    double value_;
    int sign_;
};

struct QuadratureSpec {
    double abs_tol = 1e-10;
    std::size_t max_subdivisions = std::size_t{1} << 16;
    /// Initial panels span at most factor * pi / max(s, 1) in the x variable.
    double oscillation_panel_factor = 0.5;

    /// Throws DomainError when abs_tol <= 0, max_subdivisions < 1 or factor <= 0.
    void validate() const;
};

struct EvalResult {
    double value;
    double error_estimate;
    std::size_t panels;
};

/// P_{-1/2+is}(cosh r) = (sqrt 2 / pi) int_0^r K(x) / sqrt(cosh r - cosh x) dx,
/// K(x) = cos(s x) on the principal series and cosh(sigma x) on the
/// complementary series. The x = r singularity is removed by x = r - u^2.
/// r = 0 returns the limit value 1. Supported range 0 <= r <= 700.
/// Throws DomainError for r outside that range, ToleranceNotReached when the
/// subdivision budget cannot meet quad.abs_tol.
double eval(const SpectralParameter& param, double r, const QuadratureSpec& quad = {});
EvalResult eval_detailed(const SpectralParameter& param, double r, const QuadratureSpec& quad = {});

/// Independent route: integrates u'' + coth(t) u' + k u = 0, u(0) = 1,
/// u'(0) = 0 with a Taylor seed near t = 0 and DOP853 up to t = r.
/// Intended for s <= 100, r <= 30; throws StepSizeUnderflow when the
/// integrator gives up.
double eval_oracle(const SpectralParameter& param, double r);

/// (r + 1) e^{-r/2}, the s-uniform bound on |P_{-1/2+is}(cosh r)|.
/// Evaluated through logarithms for r > 700.
double envelope(double r);

}  // namespace spectral_chroma::spherical
