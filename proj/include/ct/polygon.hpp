#pragma once

#include <span>
#include <vector>

#include "ct/geom.hpp"

namespace ct {

/// Convex hull of a point cloud (monotone chain), counter-clockwise, with
/// collinear and duplicate points removed. May return fewer than 3 points.
std::vector<Point> convex_hull(std::span<const Point> points, double eps = 1e-12);

/// A strictly convex polygon with vertices in counter-clockwise order.
class ConvexPolygon {
public:
    /// Validates orientation and strict convexity; throws ValidationError.
    explicit ConvexPolygon(std::vector<Point> vertices, const Tolerance& tol = {});
    static ConvexPolygon hull(std::span<const Point> points);
    static ConvexPolygon box(double x0, double y0, double x1, double y1);
    static ConvexPolygon regular(std::size_t sides, double circumradius, double phase = 0.0);

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }

    double support(Point u) const;
    std::size_t support_index(Point u) const;
    double area() const;
    Point centroid() const;
    double diameter() const;

    /// Signed distance-like violation: max over edges of the signed distance
    /// of `p` to the edge line (positive outside).
    double violation(Point p) const;
    bool contains(Point p, const Tolerance& tol = {}) const { return violation(p) <= tol.eps_geom; }

    ConvexPolygon translated(Point t) const;
    ConvexPolygon rotated(double angle) const;
    ConvexPolygon scaled(double s) const;
    ConvexPolygon reflected() const;  // -P

private:
    ConvexPolygon() = default;
    std::vector<Point> v_;
};

/// Vertex set of p (+) q by edge merge; inputs are CCW convex vertex lists
/// (degenerate lists such as a repeated point are accepted).
std::vector<Point> minkowski_sum(std::span<const Point> p, std::span<const Point> q);
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// Separating-axis test; touching polygons count as intersecting (eps slack).
bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b, const Tolerance& tol = {});

/// Intersection region of two convex polygons as a (possibly degenerate) CCW
/// vertex list; empty when disjoint.
std::vector<Point> clip(const ConvexPolygon& subject, const ConvexPolygon& clipper);

/// True when the line meets the polygon (eps slack).
bool line_meets(const Line& line, const ConvexPolygon& p, const Tolerance& tol = {});

/// Intersection point of segments [a,b] and [c,d] if they properly cross or touch.
std::vector<Point> segment_intersections(Point a, Point b, Point c, Point d);

double polygon_area(std::span<const Point> pts);

}  // namespace ct
