#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/simd/kernels.hpp"

namespace spectral_chroma::detail {

// Expands the non-negative half of a symmetric 15-point table, sign applied
// to the left half.
constexpr std::array<double, 15> mirror_gk(const std::array<double, 8>& h, double sign) {
    std::array<double, 15> out{};
    for (std::size_t i = 0; i < 7; ++i) {
        out[i] = sign * h[i];
        out[14 - i] = h[i];
    }
    out[7] = h[7];
    return out;
}

// 15-point Kronrod extension of the 7-point Gauss rule, nodes in ascending
// order. Gauss weights are zero at the Kronrod-only nodes so both sums are
// plain dot products over the same 15 samples.
struct GaussKronrod15 {
    static constexpr std::size_t size = 15;

    static constexpr std::array<double, 8> half_nodes{
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr std::array<double, 8> half_kronrod{
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr std::array<double, 8> half_gauss{
        0.0, 0.129484966168869693270611432679082, 0.0, 0.279705391489276667901467771423780,
        0.0, 0.381830050505118944950369775488975, 0.0, 0.417959183673469387755102040816327};

    static constexpr std::array<double, size> nodes = mirror_gk(half_nodes, -1.0);
    static constexpr std::array<double, size> kronrod = mirror_gk(half_kronrod, 1.0);
    static constexpr std::array<double, size> gauss = mirror_gk(half_gauss, 1.0);
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    friend bool operator<(const Panel& l, const Panel& r) noexcept { return l.error < r.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double a, double b) {
    using GK = GaussKronrod15;
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, GK::size> fx;
    std::array<double, GK::size> dev;
    for (std::size_t i = 0; i < GK::size; ++i) fx[i] = f(center + half * GK::nodes[i]);

    const double res_k = simd::dot(GK::kronrod, fx);
    const double res_g = simd::dot(GK::gauss, fx);
    for (std::size_t i = 0; i < GK::size; ++i) dev[i] = std::abs(fx[i]);
    const double res_abs = simd::dot(GK::kronrod, dev);
    const double mean = 0.5 * res_k;
    for (std::size_t i = 0; i < GK::size; ++i) dev[i] = std::abs(fx[i] - mean);
    const double res_asc = simd::dot(GK::kronrod, dev) * std::abs(half);

    // QUADPACK QK15 error heuristic.
    double err = std::abs((res_k - res_g) * half);
    if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double scaled_abs = res_abs * std::abs(half);
    if (scaled_abs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * scaled_abs, err);
    return {a, b, res_k * half, err};
}

struct AdaptiveResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t panels = 0;
    std::size_t bisections = 0;
};

/// Globally adaptive Gauss-Kronrod integration over consecutive intervals
/// [breaks[i], breaks[i+1]]: the panel with the largest error estimate is
/// bisected until the summed estimate is <= abs_tol. Throws
/// ToleranceNotReached once more than max_bisections splits would be needed.
template <class F>
AdaptiveResult integrate_adaptive(F&& f, std::span<const double> breaks, double abs_tol,
                                  std::size_t max_bisections) {
    std::priority_queue<Panel> queue;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Panel p = gauss_kronrod_panel(f, breaks[i], breaks[i + 1]);
        total_error += p.error;
        queue.push(p);
    }

    std::size_t bisections = 0;
    while (total_error > abs_tol) {
        if (bisections >= max_bisections)
            throw ToleranceNotReached("quadrature did not reach abs_tol " + std::to_string(abs_tol) +
                                          " within " + std::to_string(max_bisections) +
                                          " subdivisions (error estimate " +
                                          std::to_string(total_error) + ")",
                                      total_error);
        const Panel worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ToleranceNotReached("quadrature panel collapsed to machine resolution", total_error);
        queue.pop();
        Panel left = gauss_kronrod_panel(f, worst.a, mid);
        Panel right = gauss_kronrod_panel(f, mid, worst.b);
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++bisections;
    }

    AdaptiveResult result;
    result.panels = queue.size();
    result.bisections = bisections;
    // Sum in ascending abscissa order for reproducibility.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    for (const Panel& p : panels) {
        result.value += p.value;
        result.error += p.error;
    }
    return result;
}

}  // namespace spectral_chroma::detail
