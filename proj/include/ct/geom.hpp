#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>

namespace ct {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance policy. `eps_geom` governs predicates and containment,
/// `eps_cover` the slack allowed by sampled coverage checks.
struct Tolerance {
    double eps_geom = 1e-9;
    double eps_cover = 1e-7;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
    Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(Point a) { return {-a.x, -a.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }
inline Point unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Point rotate(Point p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Reduces an angle to [0, period).
double wrap_angle(double theta, double period = kTwoPi);

/// A direction of the unit circle, theta normalized to [0, 2pi).
class Direction {
public:
    Direction() = default;
    explicit Direction(double theta) : theta_(wrap_angle(theta)) {}
    double theta() const { return theta_; }
    Point unit() const { return unit_vector(theta_); }
    Direction opposite() const { return Direction(theta_ + kPi); }

private:
    double theta_ = 0.0;
};

/// The line {q : q . u(normal) = offset}, kept with normal angle in [0, pi).
class Line {
public:
    Line() = default;
    Line(Direction normal, double offset);
    static Line through(Point a, Point b);

    Direction normal() const { return normal_; }
    double offset() const { return offset_; }
    double signed_distance(Point p) const { return dot(p, normal_.unit()) - offset_; }
    Point point() const { return offset_ * normal_.unit(); }
    Point along() const { const Point u = normal_.unit(); return {-u.y, u.x}; }

private:
    Direction normal_;
    double offset_ = 0.0;
};

bool same_line(const Line& a, const Line& b, double eps = 1e-9);

struct Disk {
    Point center;
    double radius = 0.0;
};

/// Sign of the exact determinant of (q - p, r - p): the fast floating
/// evaluation is used when it clears its rounding bound, otherwise the sign
/// is recomputed with error-free expansions.
int orient_exact(Point p, Point q, Point r);

/// Orientation with the tolerance policy: 0 when |det| <= eps_geom * |q-p| * |r-p|.
int orient(Point p, Point q, Point r, const Tolerance& tol = {});

/// Intersection of two lines; nullopt when they are parallel.
std::optional<Point> line_intersect(const Line& a, const Line& b, const Tolerance& tol = {});

/// Disk through three points. Throws CollinearInput.
Disk circumcircle(Point p, Point q, Point r, const Tolerance& tol = {});

/// Smallest enclosing disk (Welzl, move-to-front, deterministic order).
/// Throws EmptyInput.
Disk min_enclosing_disk(std::span<const Point> points);

bool contains_point(const Disk& d, Point p, const Tolerance& tol = {});

}  // namespace ct
