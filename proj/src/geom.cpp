#include "ct/geom.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ct/errors.hpp"

namespace ct {

double wrap_angle(double theta, double period) {
    double t = std::fmod(theta, period);
    if (t < 0.0) t += period;
    if (t >= period) t -= period;
    return t;
}

Line::Line(Direction normal, double offset) : normal_(normal), offset_(offset) {
    if (normal_.theta() >= kPi) {
        normal_ = Direction(normal_.theta() - kPi);
        offset_ = -offset_;
    }
}

Line Line::through(Point a, Point b) {
    const Point d = b - a;
    const double theta = std::atan2(d.y, d.x) + kPi / 2.0;
    const Direction n(theta);
    return Line(n, dot(a, n.unit()));
}

bool same_line(const Line& a, const Line& b, double eps) {
    double dt = std::abs(a.normal().theta() - b.normal().theta());
    if (dt < eps) return std::abs(a.offset() - b.offset()) < eps;
    // Normals near 0 and near pi describe the same family of lines.
    if (std::abs(dt - kPi) < eps) return std::abs(a.offset() + b.offset()) < eps;
    return false;
}

namespace {

struct Pair {
    double hi;
    double lo;
};

Pair two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

Pair two_diff(double a, double b) { return two_sum(a, -b); }

Pair two_product(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

// Adds `b` into a nonoverlapping expansion kept in increasing magnitude.
void grow(std::vector<double>& e, double b) {
    double q = b;
    std::vector<double> out;
    out.reserve(e.size() + 1);
    for (double ei : e) {
        const Pair s = two_sum(q, ei);
        if (s.lo != 0.0) out.push_back(s.lo);
        q = s.hi;
    }
    if (q != 0.0) out.push_back(q);
    e.swap(out);
}

int exact_sign(Point p, Point q, Point r) {
    const Pair ax = two_diff(q.x, p.x), ay = two_diff(q.y, p.y);
    const Pair bx = two_diff(r.x, p.x), by = two_diff(r.y, p.y);
    std::vector<double> e;
    const double a_x[2] = {ax.hi, ax.lo}, a_y[2] = {ay.hi, ay.lo};
    const double b_x[2] = {bx.hi, bx.lo}, b_y[2] = {by.hi, by.lo};
    for (double u : a_x)
        for (double v : b_y) {
            const Pair t = two_product(u, v);
            grow(e, t.hi);
            grow(e, t.lo);
        }
    for (double u : a_y)
        for (double v : b_x) {
            const Pair t = two_product(u, v);
            grow(e, -t.hi);
            grow(e, -t.lo);
        }
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        if (*it != 0.0) return *it > 0 ? 1 : -1;
    return 0;
}

}  // namespace

int orient_exact(Point p, Point q, Point r) {
    const double l = (q.x - p.x) * (r.y - p.y);
    const double rr = (q.y - p.y) * (r.x - p.x);
    const double det = l - rr;
    const double bound = 3.3306690738754716e-16 * (std::abs(l) + std::abs(rr));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    return exact_sign(p, q, r);
}

int orient(Point p, Point q, Point r, const Tolerance& tol) {
    const double det = cross(q - p, r - p);
    const double scale = norm(q - p) * norm(r - p);
    if (std::abs(det) <= tol.eps_geom * scale) return 0;
    return orient_exact(p, q, r);
}

std::optional<Point> line_intersect(const Line& a, const Line& b, const Tolerance& tol) {
    const Point u = a.normal().unit();
    const Point v = b.normal().unit();
    const double det = cross(u, v);
    if (std::abs(det) <= tol.eps_geom) return std::nullopt;
    // Solve u.p = a.offset, v.p = b.offset by Cramer's rule.
    return Point{(a.offset() * v.y - b.offset() * u.y) / det,
                 (u.x * b.offset() - v.x * a.offset()) / det};
}

Disk circumcircle(Point p, Point q, Point r, const Tolerance& tol) {
    if (orient(p, q, r, tol) == 0) throw CollinearInput("circumcircle: points are collinear");
    const Point b = q - p, c = r - p;
    const double d = 2.0 * cross(b, c);
    const double b2 = dot(b, b), c2 = dot(c, c);
    const Point center{(c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d};
    return {p + center, norm(center)};
}

namespace {

Disk disk_from_two(Point a, Point b) { return {(a + b) / 2.0, dist(a, b) / 2.0}; }

Disk disk_from_three(Point a, Point b, Point c) {
    if (orient(a, b, c, Tolerance{1e-14, 1e-14}) != 0) return circumcircle(a, b, c, Tolerance{1e-14, 1e-14});
    Disk best = disk_from_two(a, b);
    for (const Disk& d : {disk_from_two(a, c), disk_from_two(b, c)})
        if (d.radius > best.radius) best = d;
    return best;
}

bool inside(const Disk& d, Point p) {
    return dist(d.center, p) <= d.radius * (1.0 + 1e-12) + 1e-15;
}

}  // namespace

Disk min_enclosing_disk(std::span<const Point> points) {
    if (points.empty()) throw EmptyInput("min_enclosing_disk: no points");
    std::vector<Point> pts(points.begin(), points.end());
    // Deterministic shuffle keeps the expected linear running time.
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    for (std::size_t i = pts.size(); i > 1; --i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        std::swap(pts[i - 1], pts[state % i]);
    }
    Disk d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (inside(d, pts[i])) continue;
        d = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(d, pts[j])) continue;
            d = disk_from_two(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k)
                if (!inside(d, pts[k])) d = disk_from_three(pts[i], pts[j], pts[k]);
        }
    }
    return d;
}

bool contains_point(const Disk& d, Point p, const Tolerance& tol) {
    return dist(d.center, p) <= d.radius + tol.eps_geom;
}

}  // namespace ct
