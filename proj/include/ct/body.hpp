#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ct/geom.hpp"
#include "ct/polygon.hpp"

namespace ct {

struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // [[a b] [c d]]
    Point operator()(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const;
    Mat2 transpose() const { return {a, c, b, d}; }
    friend Mat2 operator*(const Mat2& l, const Mat2& r);
};

struct DiskShape {
    double radius = 0.5;
};

struct PolygonShape {
    ConvexPolygon polygon;
};

/// Reuleaux polygon with an odd number of arms; the first vertex sits at
/// angle pi/2 + rotation on the circumcircle centered at the body origin.
struct ReuleauxShape {
    int arms = 3;
    double width = 1.0;
    double rotation = 0.0;
};

/// Support values sampled at increasing angles in [0, 2pi). The body is the
/// intersection of the sampled support half-planes; the support function
/// between samples is the piecewise-linear interpolation in angle.
struct SampledShape {
    std::vector<double> angles;
    std::vector<double> values;
};

/// A planar convex body K with nonempty interior, stored as one of several
/// closed-form representations placed at `origin`.
class Body {
public:
    using Shape = std::variant<DiskShape, PolygonShape, ReuleauxShape, SampledShape>;

    Body() : Body(DiskShape{}, Point{}) {}

    static Body disk(double radius, Point origin = {});
    static Body polygon(ConvexPolygon p);
    static Body reuleaux(int arms, double width, double rotation = 0.0, Point origin = {});
    static Body sampled(std::vector<double> angles, std::vector<double> values, Point origin = {});

    const Shape& shape() const { return shape_; }
    Point origin() const { return origin_; }
    std::string kind() const;

    double support(Point u) const;
    double support(Direction d) const { return support(d.unit()); }
    double width(Direction d) const { return support(d) + support(d.opposite()); }
    /// A boundary point attaining the support value in direction u.
    Point support_point(Point u) const;

    /// Convex "outside-ness" of p: <= 0 exactly when p is in K.
    double violation(Point p) const;
    bool contains(Point p, const Tolerance& tol = {}) const { return violation(p) <= tol.eps_geom; }

    /// Radius of the largest disk centered at c inside K (negative if c is outside).
    double inner_radius_at(Point c) const;
    /// Radius of the smallest disk centered at c containing K.
    double outer_radius_at(Point c) const;

    /// Width if constant to within `rel_tol` on a 4096-direction grid.
    std::optional<double> constant_width(double rel_tol = 1e-6) const;

    /// Vertices of the CCW Reuleaux corners (Reuleaux shapes only).
    std::vector<Point> reuleaux_vertices() const;

    /// Polygon inside K (hull of support points) or containing K (intersection
    /// of support half-planes) from `n` equally spaced directions.
    ConvexPolygon inscribed_polygon(std::size_t n) const;
    ConvexPolygon circumscribed_polygon(std::size_t n) const;

    /// Image under a linear map. Disks and Reuleaux bodies accept only
    /// similarities; polygons and sampled bodies accept any invertible map.
    Body transformed(const Mat2& m) const;
    Body with_origin(Point o) const;

    /// Worst angular interpolation error bound for sampled bodies, 0 otherwise.
    double sampling_modulus() const;

private:
    Body(Shape s, Point origin);
    Shape shape_;
    Point origin_;
    std::vector<Point> cache_;  // Reuleaux corners or sampled half-plane vertices
};

/// K + shift.
struct TranslateSet {
    std::shared_ptr<const Body> body;
    Point shift;

    bool contains(Point p, const Tolerance& tol = {}) const { return body->contains(p - shift, tol); }
    double support(Point u) const { return body->support(u) + dot(shift, u); }
};

/// K (+) (-K). Disk for constant-width and disk inputs, polygon for polygons.
Body difference_body(const Body& k);

/// (K + a) meets (K + b), decided by b - a in K (+) (-K).
bool translates_intersect(const Body& k, Point a, Point b, const Tolerance& tol = {});
/// Same test with a precomputed difference body.
bool translates_intersect_diff(const Body& diff, Point a, Point b, const Tolerance& tol = {});

enum class NormalizationMode { john, constant_width, near_disk };

struct NormalizationReport {
    Disk inner;            // in normalized coordinates
    Disk outer;
    double ratio = 1.0;    // outer.radius / inner.radius
    Mat2 transform;        // original -> normalized coordinates (linear)
    Body body;             // transform applied to K
    bool verified = false; // inner in K in outer on the angular grid
    double sampling_modulus = 0.0;
};

/// Near-disk gate used by the three-circle pentagon cover: 2.2356 / 2.
inline constexpr double kNearDiskRatio = 1.1178;

/// Finds concentric inner/outer disks of K. Throws NotNearDisk or NotConstantWidth.
NormalizationReport normalize_inner_outer(const Body& k, NormalizationMode mode, const Tolerance& tol = {});

/// Center maximizing the inner radius (coarse grid then pattern search).
Point max_inner_center(const Body& k);

/// Minimum-area enclosing ellipse of a point set as the linear map sending
/// it to a unit disk, plus its center (Khachiyan iterations).
std::pair<Mat2, Point> lowner_map(std::span<const Point> pts, double tol = 1e-9);

}  // namespace ct
