#include "ct/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ct/errors.hpp"

namespace ct {

std::vector<Point> convex_hull(std::span<const Point> points, double eps) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto turn = [eps](Point o, Point a, Point b) {
        const double c = cross(a - o, b - o);
        return c > eps * (norm(a - o) * norm(b - o) + 1e-300);
    };
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && !turn(h[k - 2], h[k - 1], p)) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && !turn(h[k - 2], h[k - 1], pts[i])) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices, const Tolerance& tol) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw ValidationError("polygon needs at least 3 vertices");
    for (const Point& p : v_)
        if (!finite(p)) throw ValidationError("polygon vertex is not finite");
    const std::size_t n = v_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int o = orient(v_[(i + n - 1) % n], v_[i], v_[(i + 1) % n], tol);
        if (o < 0) throw ValidationError("polygon vertices must be in counter-clockwise order (CCW)");
        if (o == 0) throw ValidationError("polygon must be strictly convex");
    }
    // Local left turns are not enough: the winding must be exactly once.
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v_[(i + 1) % n] - v_[i];
        const Point b = v_[(i + 2) % n] - v_[(i + 1) % n];
        turning += std::atan2(cross(a, b), dot(a, b));
    }
    if (std::abs(turning - kTwoPi) > 1e-6) throw ValidationError("polygon is not simple and convex");
}

ConvexPolygon ConvexPolygon::hull(std::span<const Point> points) {
    auto h = convex_hull(points);
    if (h.size() < 3) throw ValidationError("hull is degenerate");
    ConvexPolygon p;
    p.v_ = std::move(h);
    return p;
}

ConvexPolygon ConvexPolygon::box(double x0, double y0, double x1, double y1) {
    return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

ConvexPolygon ConvexPolygon::regular(std::size_t sides, double circumradius, double phase) {
    std::vector<Point> v;
    v.reserve(sides);
    for (std::size_t i = 0; i < sides; ++i)
        v.push_back(circumradius * unit_vector(phase + kTwoPi * static_cast<double>(i) / static_cast<double>(sides)));
    return ConvexPolygon(std::move(v));
}

std::size_t ConvexPolygon::support_index(Point u) const {
    std::size_t best = 0;
    double bv = dot(v_[0], u);
    for (std::size_t i = 1; i < v_.size(); ++i) {
        const double d = dot(v_[i], u);
        if (d > bv) { bv = d; best = i; }
    }
    return best;
}

double ConvexPolygon::support(Point u) const { return dot(v_[support_index(u)], u); }

double polygon_area(std::span<const Point> pts) {
    double a = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) a += cross(pts[i], pts[(i + 1) % pts.size()]);
    return a / 2.0;
}

double ConvexPolygon::area() const { return polygon_area(v_); }

Point ConvexPolygon::centroid() const {
    Point c{};
    double a = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point p = v_[i], q = v_[(i + 1) % v_.size()];
        const double w = cross(p, q);
        a += w;
        c += w * (p + q);
    }
    return c / (3.0 * a);
}

double ConvexPolygon::diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i)
        for (std::size_t j = i + 1; j < v_.size(); ++j) d = std::max(d, dist(v_[i], v_[j]));
    return d;
}

double ConvexPolygon::violation(Point p) const {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point a = v_[i], b = v_[(i + 1) % v_.size()];
        const Point e = b - a;
        // Outward normal of a CCW edge is (e.y, -e.x).
        const double s = cross(p - a, e) / norm(e);
        worst = std::max(worst, s);
    }
    return worst;
}

ConvexPolygon ConvexPolygon::translated(Point t) const {
    ConvexPolygon p = *this;
    for (Point& v : p.v_) v += t;
    return p;
}

ConvexPolygon ConvexPolygon::rotated(double angle) const {
    ConvexPolygon p = *this;
    for (Point& v : p.v_) v = rotate(v, angle);
    return p;
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
    ConvexPolygon p = *this;
    for (Point& v : p.v_) v = s * v;
    return p;
}

ConvexPolygon ConvexPolygon::reflected() const {
    ConvexPolygon p = *this;
    for (Point& v : p.v_) v = -v;  // point reflection keeps CCW order
    return p;
}

namespace {

std::size_t lowest(std::span<const Point> p) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i].y < p[k].y || (p[i].y == p[k].y && p[i].x < p[k].x)) k = i;
    return k;
}

}  // namespace

std::vector<Point> minkowski_sum(std::span<const Point> p, std::span<const Point> q) {
    if (p.empty() || q.empty()) return {};
    const std::size_t n = p.size(), m = q.size();
    const std::size_t i0 = lowest(p), j0 = lowest(q);
    std::vector<Point> out;
    out.reserve(n + m);
    std::size_t i = 0, j = 0;
    while (i < n || j < m) {
        out.push_back(p[(i0 + i) % n] + q[(j0 + j) % m]);
        const Point ep = p[(i0 + i + 1) % n] - p[(i0 + i) % n];
        const Point eq = q[(j0 + j + 1) % m] - q[(j0 + j) % m];
        const double c = cross(ep, eq);
        if (j >= m || (i < n && c > 0.0)) ++i;
        else if (i >= n || c < 0.0) ++j;
        else { ++i; ++j; }
    }
    return convex_hull(out);
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    return ConvexPolygon::hull(minkowski_sum(std::span(p.vertices()), std::span(q.vertices())));
}

bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b, const Tolerance& tol) {
    for (const ConvexPolygon* poly : {&a, &b}) {
        const auto& v = poly->vertices();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point e = v[(i + 1) % v.size()] - v[i];
            const Point n = Point{e.y, -e.x} / norm(e);
            // a's extent along n vs. b's extent along n.
            const double amax = a.support(n), amin = -a.support(-n);
            const double bmax = b.support(n), bmin = -b.support(-n);
            if (amax < bmin - tol.eps_geom || bmax < amin - tol.eps_geom) return false;
        }
    }
    return true;
}

std::vector<Point> clip(const ConvexPolygon& subject, const ConvexPolygon& clipper) {
    std::vector<Point> out(subject.vertices());
    const auto& c = clipper.vertices();
    for (std::size_t i = 0; i < c.size() && !out.empty(); ++i) {
        const Point a = c[i], b = c[(i + 1) % c.size()];
        auto side = [&](Point p) { return cross(b - a, p - a); };
        std::vector<Point> in;
        for (std::size_t k = 0; k < out.size(); ++k) {
            const Point p = out[k], q = out[(k + 1) % out.size()];
            const double sp = side(p), sq = side(q);
            if (sp >= 0) in.push_back(p);
            if ((sp >= 0) != (sq >= 0)) {
                const double t = sp / (sp - sq);
                in.push_back(p + t * (q - p));
            }
        }
        out.swap(in);
    }
    return out;
}

bool line_meets(const Line& line, const ConvexPolygon& p, const Tolerance& tol) {
    const Point u = line.normal().unit();
    const double hi = p.support(u), lo = -p.support(-u);
    return lo <= line.offset() + tol.eps_geom && line.offset() <= hi + tol.eps_geom;
}

std::vector<Point> segment_intersections(Point a, Point b, Point c, Point d) {
    const Point r = b - a, s = d - c;
    const double den = cross(r, s);
    if (std::abs(den) < 1e-15 * (norm(r) * norm(s) + 1e-300)) return {};
    const double t = cross(c - a, s) / den;
    const double w = cross(c - a, r) / den;
    constexpr double slack = 1e-12;
    if (t < -slack || t > 1 + slack || w < -slack || w > 1 + slack) return {};
    return {a + t * r};
}

}  // namespace ct
