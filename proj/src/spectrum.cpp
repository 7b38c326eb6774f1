#include "spectral_chroma/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <span>
#include <thread>
#include <vector>

#include "spectral_chroma/errors.hpp"

namespace spectral_chroma::spectrum {

using spherical::SpectralParameter;

double default_s_max(double r) {
    if (!(r > 0.0)) throw DomainError("default_s_max needs r > 0");
    return std::max(100.0, 40.0 / r);
}

double full_range_floor(double r) {
    if (!(r > 0.0)) throw DomainError("full_range_floor needs r > 0");
    return -spherical::envelope(r);
}

namespace {

// Evaluates values[i] = P(s_i, r) on `threads` workers. Each worker owns a
// contiguous block; the first exception is rethrown after joining.
void sweep(double r, std::span<const double> s, std::span<double> values,
           const spherical::QuadratureSpec& quad, unsigned threads) {
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            values[i] = spherical::eval(SpectralParameter::principal(s[i]), r, quad);
    };
    if (threads <= 1 || s.size() < 64) {
        work(0, s.size());
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (s.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(s.size(), t * chunk);
        const std::size_t end = std::min(s.size(), begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            try {
                work(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

SpectrumSummary scan_principal(double r, const ScanOptions& options, std::vector<GridSample>* grid) {
    if (!(r > 0.0)) throw DomainError("scan needs r > 0");
    if (!(options.grid_step > 0.0)) throw DomainError("scan needs grid_step > 0");
    const double s_max = options.s_max > 0.0 ? options.s_max : default_s_max(r);
    if (s_max < 1.0) throw DomainError("scan needs s_max >= 1, got " + std::to_string(s_max));
    options.quad.validate();

    SpectrumSummary summary;
    summary.r = r;
    summary.M = 1.0;
    summary.m_analytic = full_range_floor(r);
    summary.s_max_scanned = s_max;
    summary.grid_step = options.grid_step;

    const auto count = static_cast<std::size_t>(std::floor(s_max / options.grid_step + 1e-9)) + 1;
    summary.grid_points = count;

    if (spherical::envelope(r) <= options.quad.abs_tol) {
        summary.degenerate = true;
        summary.m_numeric = 0.0;
        return summary;
    }

    std::vector<double> s(count);
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = static_cast<double>(i) * options.grid_step;
    const unsigned threads =
        options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    sweep(r, s, values, options.quad, threads);

    if (grid) {
        grid->clear();
        grid->reserve(count);
        for (std::size_t i = 0; i < count; ++i) grid->push_back({s[i], values[i]});
    }

    const auto best = static_cast<std::size_t>(
        std::distance(values.begin(), std::min_element(values.begin(), values.end())));
    double lo = s[best > 0 ? best - 1 : 0];
    double hi = s[std::min(best + 1, count - 1)];
    double best_s = s[best];
    double best_value = values[best];

    auto f = [&](double x) { return spherical::eval(SpectralParameter::principal(x), r, options.quad); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > options.refine_tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    for (auto [x, v] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
        if (v < best_value) {
            best_value = v;
            best_s = x;
        }
    }

    summary.m_numeric = best_value;
    summary.argmin_s = best_s;
    return summary;
}

double verify_eigenfunction(const SpectralParameter& param, double r, const geometry::Point& base,
                            std::size_t n_points, const spherical::QuadratureSpec& quad) {
    if (n_points < 8) throw DomainError("verify_eigenfunction needs n_points >= 8");
    if (!(r > 0.0)) throw DomainError("verify_eigenfunction needs r > 0");

    const auto circle = geometry::circle_points(base, r, n_points);
    std::vector<double> dist(n_points);
    geometry::distances(circle.xs, circle.ys, geometry::Point::origin(), dist);

    double sum = 0.0;
    for (double d : dist) sum += spherical::eval(param, d, quad);
    const double average = sum / static_cast<double>(n_points);

    const double eigenvalue = spherical::eval(param, r, quad);
    const double at_base =
        spherical::eval(param, geometry::distance(base, geometry::Point::origin()), quad);
    return std::abs(average - eigenvalue * at_base);
}

}  // namespace spectral_chroma::spectrum
