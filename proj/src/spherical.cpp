#include "spectral_chroma/spherical.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "spectral_chroma/detail/gauss_kronrod.hpp"
#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/ode.hpp"

namespace spectral_chroma::spherical {
namespace {

constexpr double kMaxRadius = 700.0;

int sign_of(double v) noexcept { return std::signbit(v) ? -1 : 1; }

void check_radius(double r) {
    if (!(r >= 0.0) || r > kMaxRadius)
        throw DomainError("radius must lie in [0, 700], got " + std::to_string(r));
}

// Leading terms of u(t) = 1 - k t^2/4 + k (k + 2/3) t^4 / 64 + O(k^3 t^6).
double series_value(double k, double t) noexcept {
    const double t2 = t * t;
    return 1.0 - 0.25 * k * t2 + k * (k + 2.0 / 3.0) * t2 * t2 / 64.0;
}

double series_slope(double k, double t) noexcept {
    return -0.5 * k * t + k * (k + 2.0 / 3.0) * t * t * t / 16.0;
}

// Truncated series is exact to ~1e-16 when t is small and |k| t^2 <= 1e-6.
bool series_applies(double k, double t) noexcept { return t <= 1e-2 && std::abs(k) * t * t <= 1e-6; }

// sinh(h)/h, accurate near 0.
double sinhc(double h) noexcept { return h < 1e-8 ? 1.0 : std::sinh(h) / h; }

}  // namespace

SpectralParameter SpectralParameter::principal(double s) {
    if (!std::isfinite(s)) throw DomainError("principal parameter s must be finite");
    return {Series::principal, std::abs(s), sign_of(s)};
}

SpectralParameter SpectralParameter::complementary(double sigma) {
    if (!std::isfinite(sigma) || std::abs(sigma) > 0.5)
        throw DomainError("complementary parameter needs |sigma| <= 1/2, got " + std::to_string(sigma));
    return {Series::complementary, std::abs(sigma), sign_of(sigma)};
}

double SpectralParameter::radial_coefficient() const noexcept {
    return series_ == Series::principal ? value_ * value_ + 0.25 : 0.25 - value_ * value_;
}

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("abs_tol must be positive");
    if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
    if (!(oscillation_panel_factor > 0.0) || !std::isfinite(oscillation_panel_factor))
        throw DomainError("oscillation_panel_factor must be positive");
}

EvalResult eval_detailed(const SpectralParameter& param, double r, const QuadratureSpec& quad) {
    check_radius(r);
    quad.validate();
    const double k = param.radial_coefficient();
    // k = 0 is the trivial representation: u = 1 identically.
    if (r == 0.0 || k == 0.0) return {1.0, 0.0, 0};
    if (series_applies(k, r)) return {series_value(k, r), 0.0, 0};

    const double freq = param.value();
    const bool principal = param.series() == Series::principal;

    // With x = r - u^2 and h = u^2/2:
    //   cosh r - cosh x = 2 sinh(r - h) sinh(h) = u^2 sinh(r - h) sinhc(h)
    // so the integrand 2u K(x) / sqrt(cosh r - cosh x) is smooth on [0, sqrt r].
    auto integrand = [&](double u) {
        const double h = 0.5 * u * u;
        const double x = r - u * u;
        const double kernel = principal ? std::cos(freq * x) : std::cosh(freq * x);
        return 2.0 * kernel / std::sqrt(std::sinh(r - h) * sinhc(h));
    };

    // Initial panels are uniform in x with width <= factor * pi / max(s, 1).
    const double width = quad.oscillation_panel_factor * std::numbers::pi / std::max(freq, 1.0);
    const double count = std::ceil(r / width);
    if (count > static_cast<double>(quad.max_subdivisions))
        throw ToleranceNotReached("s*r = " + std::to_string(freq * r) +
                                      " needs more initial panels than max_subdivisions allows",
                                  std::numeric_limits<double>::infinity());
    const auto n = static_cast<std::size_t>(std::max(count, 1.0));
    std::vector<double> breaks(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        breaks[j] = std::sqrt(r * static_cast<double>(j) / static_cast<double>(n));

    constexpr double prefactor = std::numbers::sqrt2 / std::numbers::pi;
    const auto result = detail::integrate_adaptive(integrand, breaks, quad.abs_tol / prefactor,
                                                   quad.max_subdivisions);
    return {prefactor * result.value, prefactor * result.error, result.panels};
}

double eval(const SpectralParameter& param, double r, const QuadratureSpec& quad) {
    return eval_detailed(param, r, quad).value;
}

double eval_oracle(const SpectralParameter& param, double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("radius must be finite and >= 0");
    const double k = param.radial_coefficient();
    const double seed = std::min(1e-3, 1e-3 / std::sqrt(std::abs(k)));
    if (r <= seed) return series_value(k, r);

    auto rhs = [k](double t, const ode::State<2>& y) -> ode::State<2> {
        return {y[1], -y[1] / std::tanh(t) - k * y[0]};
    };
    const ode::State<2> start{series_value(k, seed), series_slope(k, seed)};
    ode::Options opt;
    opt.rtol = 1e-13;
    opt.atol = 1e-16;
    return ode::integrate_dop853<2>(rhs, seed, start, r, opt)[0];
}

double envelope(double r) {
    if (!(r >= 0.0)) throw DomainError("envelope needs r >= 0");
    if (r > 700.0) return std::exp(std::log1p(r) - 0.5 * r);
    return (r + 1.0) * std::exp(-0.5 * r);
}

}  // namespace spectral_chroma::spherical
