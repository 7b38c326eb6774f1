#pragma once

#include <span>
#include <vector>

// Upper half-plane model of the hyperbolic plane: points, orientation
// preserving isometries (PSL2(R) acting by Moebius maps), distance and
// circle parametrization.

namespace spectral_chroma::geometry {

/// Largest radius accepted by circle_point. Beyond it the entries of
/// diag(e^{r/2}, e^{-r/2}) carry no meaningful double precision.
inline constexpr double kMaxCircleRadius = 40.0;

/// A point x + iy with y > 0. Construction rejects y <= 0 and non-finite input.
class Point {
public:
    Point(double x, double y);

    /// The point i, fixed by the rotation subgroup K.
    static Point origin() noexcept { return Point(0.0, 1.0, Unchecked{}); }

    double x() const noexcept { return x_; }
    double y() const noexcept { return y_; }

    friend bool operator==(const Point&, const Point&) = default;

private:
    struct Unchecked {};
    Point(double x, double y, Unchecked) noexcept : x_(x), y_(y) {}
    friend class MoebiusMap;

    double x_;
    double y_;
};

/// Element of PSL2(R). Entries are rescaled to unit determinant on
/// construction; g and -g compare equal.
class MoebiusMap {
public:
    /// Throws DomainError unless ad - bc > 0 and all entries are finite.
    MoebiusMap(double a, double b, double c, double d);

    static MoebiusMap identity() noexcept;
    /// diag(e^{r/2}, e^{-r/2}): z -> e^r z, moves i a distance r along the imaginary axis.
    static MoebiusMap geodesic_shift(double r);
    /// [[cos phi, sin phi], [-sin phi, cos phi]]: rotation about i by angle 2 phi.
    static MoebiusMap rotation(double phi);
    /// The affine map z -> y z + x, taking i to p.
    static MoebiusMap origin_to(const Point& p) noexcept;

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }

    Point apply(const Point& p) const noexcept;
    MoebiusMap operator*(const MoebiusMap& rhs) const noexcept;
    MoebiusMap inverse() const noexcept;

    /// Equality in PSL2(R) with entrywise tolerance 1e-12.
    bool operator==(const MoebiusMap& rhs) const noexcept;

private:
    struct Normalized {};
    MoebiusMap(double a, double b, double c, double d, Normalized) noexcept
        : a_(a), b_(b), c_(c), d_(d) {}

    double a_, b_, c_, d_;
};

/// Hyperbolic distance, acosh(1 + |p-q|^2 / (2 y_p y_q)), evaluated as
/// 2 asinh(|p-q| / (2 sqrt(y_p y_q))) to keep precision for nearby points.
/// Bit-symmetric in its arguments.
double distance(const Point& p, const Point& q) noexcept;

/// Distances from each (xs[i], ys[i]) to `to`, written to out. Batched form of
/// distance() on the active SIMD kernel; every ys[i] must be positive.
void distances(std::span<const double> xs, std::span<const double> ys, const Point& to,
               std::span<double> out);

/// Point at angle theta on the circle of radius r about center, realized as
/// g k_{theta/2} a_r i with g = origin_to(center). Requires 0 <= r <= kMaxCircleRadius.
Point circle_point(const Point& center, double r, double theta);

/// n equally spaced points (theta_j = 2 pi j / n) on the circle, as coordinate arrays.
struct CirclePoints {
    std::vector<double> xs;
    std::vector<double> ys;
};
CirclePoints circle_points(const Point& center, double r, std::size_t n);

}  // namespace spectral_chroma::geometry
