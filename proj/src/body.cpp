#include "ct/body.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ct/errors.hpp"

namespace ct {

Mat2 Mat2::inverse() const {
    const double det_ = det();
    if (std::abs(det_) < 1e-300) throw ValidationError("singular linear map");
    return {d / det_, -b / det_, -c / det_, a / det_};
}

Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double reuleaux_circumradius(int arms, double width) {
    const double k = arms;
    return width / (2.0 * std::sin(kPi * (k - 1.0) / (2.0 * k)));
}

std::vector<Point> reuleaux_corners(const ReuleauxShape& r) {
    std::vector<Point> v;
    const double rad = reuleaux_circumradius(r.arms, r.width);
    for (int i = 0; i < r.arms; ++i) v.push_back(rad * unit_vector(kPi / 2.0 + r.rotation + kTwoPi * i / r.arms));
    return v;
}

// Arc j of a Reuleaux polygon is centered at corner j and faces the two
// opposite corners; returns the mid-angle of its direction range.
double arc_mid(const std::vector<Point>& v, std::size_t j) {
    const std::size_t k = v.size(), m = (k - 1) / 2;
    const Point a = v[(j + m) % k] - v[j], b = v[(j + m + 1) % k] - v[j];
    const Point s = a / norm(a) + b / norm(b);
    return std::atan2(s.y, s.x);
}

bool in_arc(const std::vector<Point>& v, std::size_t j, double theta) {
    const double half = kPi / (2.0 * static_cast<double>(v.size()));
    double d = wrap_angle(theta - arc_mid(v, j));
    if (d > kPi) d -= kTwoPi;
    return std::abs(d) <= half + 1e-15;
}

double sampled_interp(const SampledShape& s, double theta) {
    const auto& a = s.angles;
    const std::size_t n = a.size();
    theta = wrap_angle(theta);
    auto it = std::upper_bound(a.begin(), a.end(), theta);
    std::size_t hi = static_cast<std::size_t>(it - a.begin()) % n;
    std::size_t lo = (hi + n - 1) % n;
    double t0 = a[lo], t1 = a[hi];
    double x = theta;
    if (t1 <= t0) {  // wrap-around interval
        t1 += kTwoPi;
        if (x < t0) x += kTwoPi;
    }
    const double w = (t1 - t0) > 0 ? (x - t0) / (t1 - t0) : 0.0;
    return s.values[lo] + w * (s.values[hi] - s.values[lo]);
}

std::vector<Point> halfplane_vertices(const SampledShape& s) {
    const std::size_t n = s.angles.size();
    std::vector<Point> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const Line li(Direction(s.angles[i]), s.values[i]);
        const Line lj(Direction(s.angles[j]), s.values[j]);
        auto p = line_intersect(li, lj, Tolerance{1e-15, 1e-15});
        if (!p) throw ValidationError("sampled support has parallel consecutive samples");
        v[i] = *p;
    }
    return v;
}

}  // namespace

Body::Body(Shape s, Point origin) : shape_(std::move(s)), origin_(origin) {
    if (!finite(origin_)) throw ValidationError("body origin is not finite");
    std::visit(overloaded{
                   [](const DiskShape& d) {
                       if (!(d.radius > 0.0) || !std::isfinite(d.radius)) throw ValidationError("disk radius must be positive");
                   },
                   [](const PolygonShape&) {},
                   [this](const ReuleauxShape& r) {
                       if (r.arms < 3 || r.arms % 2 == 0) throw ValidationError("Reuleaux arm count must be odd and >= 3");
                       if (!(r.width > 0.0) || !std::isfinite(r.width)) throw ValidationError("Reuleaux width must be positive");
                       cache_ = reuleaux_corners(r);
                   },
                   [this](const SampledShape& s) {
                       const std::size_t n = s.angles.size();
                       if (n < 8 || s.values.size() != n) throw ValidationError("sampled support needs >= 8 (angle, value) pairs");
                       for (std::size_t i = 0; i < n; ++i) {
                           if (!std::isfinite(s.angles[i]) || !std::isfinite(s.values[i]))
                               throw ValidationError("sampled support values must be finite");
                           if (s.angles[i] < 0.0 || s.angles[i] >= kTwoPi) throw ValidationError("sample angles must lie in [0, 2pi)");
                           if (i > 0 && !(s.angles[i] > s.angles[i - 1])) throw ValidationError("sample angles must increase");
                       }
                       for (std::size_t i = 0; i < n; ++i) {
                           const double gap = wrap_angle(s.angles[(i + 1) % n] - s.angles[i]);
                           if (gap >= kPi - 1e-9) throw ValidationError("sample angle gaps must be below pi");
                       }
                       cache_ = halfplane_vertices(s);
                       // Each sampled line must touch the half-plane intersection.
                       double scale = 0.0;
                       for (double v : s.values) scale = std::max(scale, std::abs(v));
                       for (std::size_t i = 0; i < n; ++i) {
                           const Point u = unit_vector(s.angles[i]);
                           const Point p = cache_[(i + n - 1) % n];
                           if (s.values[i] > dot(p, u) + 1e-9 * std::max(1.0, scale) + 1e-12)
                               throw ValidationError("sampled values violate the support-function inequality");
                       }
                       if (polygon_area(cache_) <= 0.0) throw ValidationError("sampled body has empty interior");
                   },
               },
               shape_);
}

Body Body::disk(double radius, Point origin) { return Body(DiskShape{radius}, origin); }
Body Body::polygon(ConvexPolygon p) { return Body(PolygonShape{std::move(p)}, Point{}); }
Body Body::reuleaux(int arms, double width, double rotation, Point origin) {
    return Body(ReuleauxShape{arms, width, rotation}, origin);
}
Body Body::sampled(std::vector<double> angles, std::vector<double> values, Point origin) {
    return Body(SampledShape{std::move(angles), std::move(values)}, origin);
}

std::string Body::kind() const {
    return std::visit(overloaded{[](const DiskShape&) { return std::string("disk"); },
                                 [](const PolygonShape&) { return std::string("polygon"); },
                                 [](const ReuleauxShape&) { return std::string("reuleaux"); },
                                 [](const SampledShape&) { return std::string("support"); }},
                      shape_);
}

double Body::support(Point u) const {
    const double local = std::visit(
        overloaded{
            [&](const DiskShape& d) { return d.radius * norm(u); },
            [&](const PolygonShape& p) { return p.polygon.support(u); },
            [&](const ReuleauxShape& r) {
                double best = -std::numeric_limits<double>::infinity();
                for (const Point& v : cache_) best = std::max(best, dot(v, u));
                const double th = std::atan2(u.y, u.x);
                for (std::size_t j = 0; j < cache_.size(); ++j)
                    if (in_arc(cache_, j, th)) best = std::max(best, dot(cache_[j], u) + r.width * norm(u));
                return best;
            },
            [&](const SampledShape& s) {
                const double n = norm(u);
                if (n == 0.0) return 0.0;
                return n * sampled_interp(s, std::atan2(u.y, u.x));
            },
        },
        shape_);
    return local + dot(origin_, u);
}

Point Body::support_point(Point u) const {
    const Point local = std::visit(
        overloaded{
            [&](const DiskShape& d) { return d.radius * (u / norm(u)); },
            [&](const PolygonShape& p) { return p.polygon[p.polygon.support_index(u)]; },
            [&](const ReuleauxShape& r) {
                const double th = std::atan2(u.y, u.x);
                for (std::size_t j = 0; j < cache_.size(); ++j)
                    if (in_arc(cache_, j, th)) return cache_[j] + r.width * (u / norm(u));
                std::size_t best = 0;
                for (std::size_t i = 1; i < cache_.size(); ++i)
                    if (dot(cache_[i], u) > dot(cache_[best], u)) best = i;
                return cache_[best];
            },
            [&](const SampledShape&) {
                std::size_t best = 0;
                for (std::size_t i = 1; i < cache_.size(); ++i)
                    if (dot(cache_[i], u) > dot(cache_[best], u)) best = i;
                return cache_[best];
            },
        },
        shape_);
    return local + origin_;
}

double Body::violation(Point p) const {
    const Point q = p - origin_;
    return std::visit(overloaded{
                          [&](const DiskShape& d) { return norm(q) - d.radius; },
                          [&](const PolygonShape& poly) { return poly.polygon.violation(q); },
                          [&](const ReuleauxShape& r) {
                              double worst = -std::numeric_limits<double>::infinity();
                              for (const Point& v : cache_) worst = std::max(worst, dist(q, v) - r.width);
                              return worst;
                          },
                          [&](const SampledShape& s) {
                              double worst = -std::numeric_limits<double>::infinity();
                              for (std::size_t i = 0; i < s.angles.size(); ++i)
                                  worst = std::max(worst, dot(q, unit_vector(s.angles[i])) - s.values[i]);
                              return worst;
                          },
                      },
                      shape_);
}

double Body::inner_radius_at(Point c) const {
    // For every representation K is an intersection of disks or half-planes,
    // so the violation measures exactly the (negated) distance to the boundary.
    return -violation(c);
}

double Body::outer_radius_at(Point c) const {
    const Point q = c - origin_;
    return std::visit(overloaded{
                          [&](const DiskShape& d) { return d.radius + norm(q); },
                          [&](const PolygonShape& p) {
                              double r = 0.0;
                              for (const Point& v : p.polygon.vertices()) r = std::max(r, dist(v, q));
                              return r;
                          },
                          [&](const ReuleauxShape& rs) {
                              double r = 0.0;
                              for (const Point& v : cache_) r = std::max(r, dist(v, q));
                              for (std::size_t j = 0; j < cache_.size(); ++j) {
                                  const Point d = cache_[j] - q;
                                  const double n = norm(d);
                                  if (n > 0 && in_arc(cache_, j, std::atan2(d.y, d.x))) r = std::max(r, n + rs.width);
                              }
                              return r;
                          },
                          [&](const SampledShape&) {
                              double r = 0.0;
                              for (const Point& v : cache_) r = std::max(r, dist(v, q));
                              return r;
                          },
                      },
                      shape_);
}

std::optional<double> Body::constant_width(double rel_tol) const {
    constexpr int kN = 4096;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
    for (int i = 0; i < kN; ++i) {
        const double w = width(Direction(kPi * i / kN));
        lo = std::min(lo, w);
        hi = std::max(hi, w);
        sum += w;
    }
    const double mean = sum / kN;
    if (hi - lo <= rel_tol * std::max(1.0, mean)) return mean;
    return std::nullopt;
}

std::vector<Point> Body::reuleaux_vertices() const {
    std::vector<Point> out;
    if (std::holds_alternative<ReuleauxShape>(shape_))
        for (const Point& v : cache_) out.push_back(v + origin_);
    return out;
}

ConvexPolygon Body::inscribed_polygon(std::size_t n) const {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(support_point(unit_vector(kTwoPi * i / n)));
    if (const auto* p = std::get_if<PolygonShape>(&shape_))
        for (const Point& v : p->polygon.vertices()) pts.push_back(v + origin_);
    if (std::holds_alternative<ReuleauxShape>(shape_) || std::holds_alternative<SampledShape>(shape_))
        for (const Point& v : cache_) pts.push_back(v + origin_);
    return ConvexPolygon::hull(pts);
}

ConvexPolygon Body::circumscribed_polygon(std::size_t n) const {
    if (const auto* p = std::get_if<PolygonShape>(&shape_)) return p->polygon.translated(origin_);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const Direction a(kTwoPi * i / n), b(kTwoPi * (i + 1) / n);
        const auto p = line_intersect(Line(a, support(a)), Line(b, support(b)), Tolerance{1e-15, 1e-15});
        if (p) pts.push_back(*p);
    }
    return ConvexPolygon::hull(pts);
}

namespace {

// Scale factor s when m = s * rotation; nullopt otherwise.
std::optional<double> similarity_scale(const Mat2& m) {
    const double s2 = m.a * m.a + m.c * m.c;
    const double t2 = m.b * m.b + m.d * m.d;
    const double o = m.a * m.b + m.c * m.d;
    if (std::abs(s2 - t2) > 1e-12 * s2 || std::abs(o) > 1e-12 * s2 || m.det() <= 0) return std::nullopt;
    return std::sqrt(s2);
}

}  // namespace

Body Body::transformed(const Mat2& m) const {
    if (std::abs(m.det()) < 1e-300) throw ValidationError("linear map must be invertible");
    const Point o = m(origin_);
    return std::visit(
        overloaded{
            [&](const DiskShape& d) {
                const auto s = similarity_scale(m);
                if (!s) throw ValidationError("disk bodies accept only similarity maps");
                return Body::disk(d.radius * *s, o);
            },
            [&](const PolygonShape& p) {
                std::vector<Point> v;
                for (const Point& q : p.polygon.vertices()) v.push_back(m(q + origin_));
                if (m.det() < 0) std::reverse(v.begin(), v.end());
                return Body::polygon(ConvexPolygon(std::move(v), Tolerance{1e-14, 1e-14}));
            },
            [&](const ReuleauxShape& r) {
                const auto s = similarity_scale(m);
                if (!s) throw ValidationError("Reuleaux bodies accept only similarity maps");
                return Body::reuleaux(r.arms, r.width * *s, r.rotation + std::atan2(m.c, m.a), o);
            },
            [&](const SampledShape& s) {
                // h'(u) = h(M^T u); resample on the same angle grid.
                const Mat2 mt = m.transpose();
                std::vector<double> vals;
                for (double a : s.angles) {
                    const Point u = mt(unit_vector(a));
                    vals.push_back(norm(u) * sampled_interp(s, std::atan2(u.y, u.x)));
                }
                return Body::sampled(s.angles, std::move(vals), o);
            },
        },
        shape_);
}

Body Body::with_origin(Point o) const {
    Body b = *this;
    b.origin_ = o;
    return b;
}

double Body::sampling_modulus() const {
    const auto* s = std::get_if<SampledShape>(&shape_);
    if (!s) return 0.0;
    double worst = 0.0;
    const std::size_t n = s->angles.size();
    for (std::size_t i = 0; i < n; ++i) {
        double a0 = s->angles[i], a1 = s->angles[(i + 1) % n];
        if (a1 <= a0) a1 += kTwoPi;
        const Point u = unit_vector((a0 + a1) / 2.0);
        double exact = -std::numeric_limits<double>::infinity();
        for (const Point& v : cache_) exact = std::max(exact, dot(v, u));
        worst = std::max(worst, std::abs(exact - sampled_interp(*s, (a0 + a1) / 2.0)));
    }
    return worst;
}

Body difference_body(const Body& k) {
    return std::visit(
        overloaded{
            [&](const DiskShape& d) { return Body::disk(2.0 * d.radius); },
            [&](const PolygonShape& p) {
                return Body::polygon(minkowski_sum(p.polygon, p.polygon.reflected()));
            },
            [&](const ReuleauxShape& r) { return Body::disk(r.width); },
            [&](const SampledShape& s) {
                std::vector<double> vals;
                double lo = std::numeric_limits<double>::infinity(), hi = -lo;
                for (double a : s.angles) {
                    const double w = k.width(Direction(a));
                    vals.push_back(w);
                    lo = std::min(lo, w);
                    hi = std::max(hi, w);
                }
                if (hi - lo <= 1e-9 * std::max(1.0, hi)) return Body::disk((lo + hi) / 2.0);
                return Body::sampled(s.angles, std::move(vals));
            },
        },
        k.shape());
}

bool translates_intersect_diff(const Body& diff, Point a, Point b, const Tolerance& tol) {
    return diff.contains(b - a, tol);
}

bool translates_intersect(const Body& k, Point a, Point b, const Tolerance& tol) {
    return translates_intersect_diff(difference_body(k), a, b, tol);
}

namespace {

template <class F>
Point pattern_maximize(F f, Point start, double step, double min_step) {
    Point c = start;
    double best = f(c);
    constexpr int kDirs = 16;
    while (step > min_step) {
        bool moved = false;
        for (int i = 0; i < kDirs; ++i) {
            const Point cand = c + step * unit_vector(kTwoPi * i / kDirs);
            const double v = f(cand);
            if (v > best) {
                best = v;
                c = cand;
                moved = true;
            }
        }
        if (!moved) step /= 2.0;
    }
    return c;
}

}  // namespace

Point max_inner_center(const Body& k) {
    const double xmax = k.support(Point{1, 0}), xmin = -k.support(Point{-1, 0});
    const double ymax = k.support(Point{0, 1}), ymin = -k.support(Point{0, -1});
    const double size = std::max(xmax - xmin, ymax - ymin);
    Point best{(xmin + xmax) / 2, (ymin + ymax) / 2};
    double bv = k.inner_radius_at(best);
    constexpr int kGrid = 24;
    for (int i = 0; i <= kGrid; ++i)
        for (int j = 0; j <= kGrid; ++j) {
            const Point c{xmin + (xmax - xmin) * i / kGrid, ymin + (ymax - ymin) * j / kGrid};
            const double v = k.inner_radius_at(c);
            if (v > bv) { bv = v; best = c; }
        }
    return pattern_maximize([&](Point c) { return k.inner_radius_at(c); }, best, size / kGrid, 1e-13 * size);
}

std::pair<Mat2, Point> lowner_map(std::span<const Point> pts, double tol) {
    const std::size_t n = pts.size();
    if (n < 3) throw ValidationError("ellipse fit needs at least 3 points");
    std::vector<double> u(n, 1.0 / static_cast<double>(n));
    constexpr double d = 2.0;
    for (int iter = 0; iter < 200000; ++iter) {
        std::array<std::array<double, 3>, 3> x{};
        for (std::size_t i = 0; i < n; ++i) {
            const double q[3] = {pts[i].x, pts[i].y, 1.0};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) x[r][c] += u[i] * q[r] * q[c];
        }
        // 3x3 inverse by cofactors.
        const double det = x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
                           x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
                           x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
        if (std::abs(det) < 1e-300) throw ValidationError("ellipse fit on degenerate points");
        std::array<std::array<double, 3>, 3> inv{};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
                inv[r][c] = (x[r1][c1] * x[r2][c2] - x[r1][c2] * x[r2][c1]) / det;
            }
        std::size_t j = 0;
        double mj = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double q[3] = {pts[i].x, pts[i].y, 1.0};
            double m = 0.0;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) m += q[r] * inv[r][c] * q[c];
            if (m > mj) { mj = m; j = i; }
        }
        const double step = (mj - d - 1.0) / ((d + 1.0) * (mj - 1.0));
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double nu = (1.0 - step) * u[i] + (i == j ? step : 0.0);
            change += (nu - u[i]) * (nu - u[i]);
            u[i] = nu;
        }
        if (std::sqrt(change) < tol) break;
    }
    Point c{};
    for (std::size_t i = 0; i < n; ++i) c += u[i] * pts[i];
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point p = pts[i] - c;
        sxx += u[i] * p.x * p.x;
        sxy += u[i] * p.x * p.y;
        syy += u[i] * p.y * p.y;
    }
    // A = S^{-1} / d; the map is the symmetric square root of A.
    const Mat2 s{sxx, sxy, sxy, syy};
    Mat2 a = s.inverse();
    a = {a.a / d, a.b / d, a.c / d, a.d / d};
    const double sd = std::sqrt(a.det());
    const double t = std::sqrt(a.a + a.d + 2.0 * sd);
    const Mat2 root{(a.a + sd) / t, a.b / t, a.c / t, (a.d + sd) / t};
    return {root, c};
}

NormalizationReport normalize_inner_outer(const Body& k, NormalizationMode mode, const Tolerance& tol) {
    NormalizationReport rep;
    rep.body = k;
    if (mode == NormalizationMode::constant_width && !k.constant_width(1e-6))
        throw NotConstantWidth("body width varies by more than 1e-6");
    if (mode == NormalizationMode::john) {
        if (const auto* p = std::get_if<PolygonShape>(&k.shape())) {
            std::vector<Point> v;
            for (const Point& q : p->polygon.vertices()) v.push_back(q + k.origin());
            rep.transform = lowner_map(v).first;
            rep.body = k.transformed(rep.transform);
        }
    }
    const Body& b = rep.body;
    auto ratio_at = [&](Point c) {
        const double in = b.inner_radius_at(c);
        return in > 0 ? b.outer_radius_at(c) / in : std::numeric_limits<double>::infinity();
    };
    const Point c1 = max_inner_center(b);
    const double size = b.outer_radius_at(c1);
    const Point c2 = pattern_maximize([&](Point c) { return -ratio_at(c); }, c1, size / 16, 1e-13 * size);
    const Point c = ratio_at(c2) < ratio_at(c1) ? c2 : c1;
    rep.inner = {c, b.inner_radius_at(c)};
    rep.outer = {c, b.outer_radius_at(c)};
    if (!(rep.inner.radius > 0)) throw ValidationError("body has empty interior");
    rep.ratio = rep.outer.radius / rep.inner.radius;
    rep.sampling_modulus = b.sampling_modulus();

    constexpr int kGrid = 10000;
    bool ok = true;
    for (int i = 0; i < kGrid && ok; ++i) {
        const Point u = unit_vector(kTwoPi * i / kGrid);
        const double g = b.support(u) - dot(c, u);
        const double slack = tol.eps_geom + rep.sampling_modulus;
        ok = g >= rep.inner.radius - slack && g <= rep.outer.radius + slack;
    }
    rep.verified = ok;
    if (mode == NormalizationMode::near_disk && rep.ratio > kNearDiskRatio + tol.eps_geom)
        throw NotNearDisk("inner/outer ratio " + std::to_string(rep.ratio) + " exceeds 1.1178");
    return rep;
}

}  // namespace ct
