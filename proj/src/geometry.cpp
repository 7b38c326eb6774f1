#include "spectral_chroma/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectral_chroma/errors.hpp"
#include "spectral_chroma/simd/kernels.hpp"

namespace spectral_chroma::geometry {

Point::Point(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("point coordinates must be finite");
    if (!(y > 0.0))
        throw DomainError("point must lie in the upper half-plane (y > 0), got y = " +
                          std::to_string(y));
}

MoebiusMap::MoebiusMap(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw DomainError("Moebius map entries must be finite");
    const double det = a * d - b * c;
    if (!(det > 0.0)) throw DomainError("Moebius map needs ad - bc > 0");
    const double scale = 1.0 / std::sqrt(det);
    a_ = a * scale;
    b_ = b * scale;
    c_ = c * scale;
    d_ = d * scale;
}

MoebiusMap MoebiusMap::identity() noexcept { return {1.0, 0.0, 0.0, 1.0, Normalized{}}; }

MoebiusMap MoebiusMap::geodesic_shift(double r) {
    if (!std::isfinite(r)) throw DomainError("shift length must be finite");
    return {std::exp(0.5 * r), 0.0, 0.0, std::exp(-0.5 * r), Normalized{}};
}

MoebiusMap MoebiusMap::rotation(double phi) {
    if (!std::isfinite(phi)) throw DomainError("rotation angle must be finite");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, s, -s, c, Normalized{}};
}

MoebiusMap MoebiusMap::origin_to(const Point& p) noexcept {
    const double root = std::sqrt(p.y());
    return {root, p.x() / root, 0.0, 1.0 / root, Normalized{}};
}

Point MoebiusMap::apply(const Point& p) const noexcept {
    // (az + b)/(cz + d) with Im = y / |cz + d|^2 since ad - bc = 1.
    const double re_den = c_ * p.x() + d_;
    const double im_den = c_ * p.y();
    const double den = re_den * re_den + im_den * im_den;
    const double re_num = a_ * p.x() + b_;
    const double im_num = a_ * p.y();
    return {(re_num * re_den + im_num * im_den) / den, p.y() / den, Point::Unchecked{}};
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& rhs) const noexcept {
    return {a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_, c_ * rhs.a_ + d_ * rhs.c_,
            c_ * rhs.b_ + d_ * rhs.d_, Normalized{}};
}

MoebiusMap MoebiusMap::inverse() const noexcept { return {d_, -b_, -c_, a_, Normalized{}}; }

bool MoebiusMap::operator==(const MoebiusMap& rhs) const noexcept {
    constexpr double tol = 1e-12;
    auto close = [](double u, double v) { return std::abs(u - v) <= tol; };
    const bool same = close(a_, rhs.a_) && close(b_, rhs.b_) && close(c_, rhs.c_) &&
                      close(d_, rhs.d_);
    const bool negated = close(a_, -rhs.a_) && close(b_, -rhs.b_) && close(c_, -rhs.c_) &&
                         close(d_, -rhs.d_);
    return same || negated;
}

double distance(const Point& p, const Point& q) noexcept {
    const double dx = q.x() - p.x();
    const double dy = q.y() - p.y();
    const double chord = std::sqrt(dx * dx + dy * dy);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y() * q.y())));
}

void distances(std::span<const double> xs, std::span<const double> ys, const Point& to,
               std::span<double> out) {
    if (xs.size() != out.size() || ys.size() != out.size())
        throw DomainError("distances: coordinate and output spans differ in length");
    simd::sinh2_half_distance(xs, ys, to.x(), to.y(), out);
    for (double& v : out) v = 2.0 * std::asinh(std::sqrt(v));
}

Point circle_point(const Point& center, double r, double theta) {
    if (!(r >= 0.0) || r > kMaxCircleRadius)
        throw DomainError("circle radius must lie in [0, " + std::to_string(kMaxCircleRadius) +
                          "], got " + std::to_string(r));
    const MoebiusMap g = MoebiusMap::origin_to(center) * MoebiusMap::rotation(0.5 * theta) *
                         MoebiusMap::geodesic_shift(r);
    return g.apply(Point::origin());
}

CirclePoints circle_points(const Point& center, double r, std::size_t n) {
    CirclePoints pts;
    pts.xs.resize(n);
    pts.ys.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        const Point z = circle_point(center, r, theta);
        pts.xs[j] = z.x();
        pts.ys[j] = z.y();
    }
    return pts;
}

}  // namespace spectral_chroma::geometry
