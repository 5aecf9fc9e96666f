#include "ct/covering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ct/errors.hpp"
#include "ct/optimize.hpp"

namespace ct {

ConvexPolygon canonical_pentagon() {
    using namespace pentagon;
    return ConvexPolygon({A, B, C, D, E});
}

std::vector<ConvexPolygon> pentagon_pieces() {
    using namespace pentagon;
    return {ConvexPolygon({A, G, H, F}), ConvexPolygon({G, B, C, I, H}), ConvexPolygon({F, H, I, D, E})};
}

CoverGadget square_disk_cover(double side, double radius) {
    const int k = std::max(1, static_cast<int>(std::ceil(side / (radius * std::sqrt(2.0)) - 1e-12)));
    char name[96];
    std::snprintf(name, sizeof name, "%.6g-square by %d disks of radius %.6g", side, k * k, radius);
    CoverGadget g{name, ConvexPolygon::box(0, 0, side, side), {}, 0.0};
    const double cell = side / k;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) g.disks.push_back({{(i + 0.5) * cell, (j + 0.5) * cell}, radius});
    g.analytic_margin = radius - cell * std::sqrt(2.0) / 2;
    return g;
}

CoverGadget pentagon_three_circle_cover(double r, const Tolerance& tol) {
    using namespace pentagon;
    const Point M{0, r * std::sqrt(2.0)}, N{r * std::sqrt(2.0), 0};
    CoverGadget g{"pentagon by 3 circles", canonical_pentagon(), {}, 0.0};
    g.disks = {circumcircle(M, I, E), circumcircle(A, N, M), circumcircle(N, B, I)};
    for (const Disk& d : g.disks)
        if (d.radius > r + tol.eps_geom)
            throw RadiusTooSmall("circumradius " + std::to_string(d.radius) + " exceeds r = " + std::to_string(r));
    return g;
}

CoverGadget pentagon_eight_disk_cover() {
    CoverGadget g{"pentagon by 8 disks of radius 1/4", canonical_pentagon(), {}, 0.0};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            if (i != 2 || j != 2) g.disks.push_back({{(2 * i + 1) / 6.0, (2 * j + 1) / 6.0}, 0.25});
    return g;
}

namespace {

double best_slack(const std::vector<Disk>& disks, Point p) {
    double s = -std::numeric_limits<double>::infinity();
    for (const Disk& d : disks) s = std::max(s, d.radius - dist(p, d.center));
    return s;
}

struct Box {
    Point lo, hi;
};

Box bbox(const ConvexPolygon& p) {
    Box b{p[0], p[0]};
    for (const Point& v : p.vertices()) {
        b.lo = {std::min(b.lo.x, v.x), std::min(b.lo.y, v.y)};
        b.hi = {std::max(b.hi.x, v.x), std::max(b.hi.y, v.y)};
    }
    return b;
}

}  // namespace

CoverCheck verify_cover(const CoverGadget& g, double pitch, const Tolerance& tol) {
    CoverCheck out;
    out.pitch = pitch;
    out.min_slack = std::numeric_limits<double>::infinity();
    const double h = pitch * std::sqrt(2.0) / 2;
    const Box b = bbox(g.region);
    const long i0 = static_cast<long>(std::floor((b.lo.x - h) / pitch)), i1 = static_cast<long>(std::ceil((b.hi.x + h) / pitch));
    const long j0 = static_cast<long>(std::floor((b.lo.y - h) / pitch)), j1 = static_cast<long>(std::ceil((b.hi.y + h) / pitch));
    bool all_covered = true, all_certified = true;
    for (long j = j0; j <= j1; ++j)
        for (long i = i0; i <= i1; ++i) {
            const Point p{static_cast<double>(i) * pitch, static_cast<double>(j) * pitch};
            const double v = g.region.violation(p);
            if (v > h) continue;
            ++out.samples;
            const double s = best_slack(g.disks, p);
            out.min_slack = std::min(out.min_slack, s);
            if (s < h) all_certified = false;
            // Nodes outside the region only serve the continuum argument.
            if (v <= tol.eps_geom && s < -tol.eps_cover) {
                if (all_covered) out.witness = p;
                all_covered = false;
            }
        }
    out.covered = all_covered;
    out.certified = all_certified;
    return out;
}

AdaptiveCheck certify_cover_adaptive(const CoverGadget& g, double slack, double min_cell) {
    AdaptiveCheck out;
    const Box b = bbox(g.region);
    const double half = std::max(b.hi.x - b.lo.x, b.hi.y - b.lo.y) / 2;
    struct Cell {
        Point c;
        double s;
    };
    std::vector<Cell> stack{{(b.lo + b.hi) / 2.0, half}};
    while (!stack.empty()) {
        const Cell cell = stack.back();
        stack.pop_back();
        ++out.cells;
        const double diag = cell.s * std::sqrt(2.0);
        if (g.region.violation(cell.c) > diag) continue;
        bool settled = false;
        for (const Disk& d : g.disks)
            if (dist(cell.c, d.center) + diag <= d.radius + slack) {
                settled = true;
                break;
            }
        if (settled) continue;
        if (cell.s < min_cell || out.cells > 50'000'000) {
            out.witness = cell.c;
            return out;
        }
        const double q = cell.s / 2;
        for (Point o : {Point{-q, -q}, Point{q, -q}, Point{-q, q}, Point{q, q}}) stack.push_back({cell.c + o, q});
    }
    out.certified = true;
    return out;
}

Body canonical_reuleaux() { return Body::reuleaux(3, 1.0); }

RotationCoverReport reuleaux_rotation_cover(const ConvexPolygon& shape, std::size_t angle_samples, const Tolerance& tol) {
    const Body k = canonical_reuleaux();
    const auto corners = k.reuleaux_vertices();
    RotationCoverReport rep{shape, 1.0, angle_samples, {}, std::numeric_limits<double>::infinity(), 0.0};
    std::vector<Point> pts;
    for (std::size_t a = 0; a < angle_samples; ++a) {
        const double alpha = kTwoPi * static_cast<double>(a) / static_cast<double>(angle_samples);
        pts.clear();
        // R v + t lies in every unit disk around a corner iff t is within 1 of c - R v.
        for (const Point& c : corners)
            for (const Point& v : shape.vertices()) pts.push_back(c - rotate(v, alpha));
        const Disk d = min_enclosing_disk(pts);
        const double slack = 1.0 - d.radius;
        rep.witnesses.push_back(d.center);
        if (slack < rep.worst_slack) {
            rep.worst_slack = slack;
            rep.worst_angle = alpha;
        }
        if (slack < -tol.eps_geom)
            throw RotationUncoverable("rotation by " + std::to_string(alpha) + " rad does not fit (slack " +
                                      std::to_string(slack) + ")");
    }
    return rep;
}

Placement fit_in_minus_body(const Body& k, const std::vector<Point>& points) {
    auto f = [&](Point a) {
        double w = -std::numeric_limits<double>::infinity();
        for (const Point& v : points) w = std::max(w, k.violation(a - v));
        return w;
    };
    Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    Point hi = -lo;
    const double ex = k.support(Point{1, 0}), wx = k.support(Point{-1, 0});
    const double ny = k.support(Point{0, 1}), sy = k.support(Point{0, -1});
    for (const Point& v : points) {
        lo = {std::min(lo.x, v.x - wx), std::min(lo.y, v.y - sy)};
        hi = {std::max(hi.x, v.x + ex), std::max(hi.y, v.y + ny)};
    }
    const Point a = minimize_convex_2d(f, lo, hi, 1e-12);
    return {a, -f(a)};
}

PentagonBodyCover pentagon_minus_body_cover(const Body& k, const Tolerance& tol) {
    const auto w = k.constant_width();
    if (!w || std::abs(*w - 1.0) > 1e-6) throw NotConstantWidth("pentagon cover needs a body of constant width 1");
    PentagonBodyCover out;
    for (const ConvexPolygon& piece : pentagon_pieces()) {
        const Placement p = fit_in_minus_body(k, piece.vertices());
        if (p.slack < -tol.eps_geom)
            throw CoverSearchFailed("no translate of -K holds a pentagon piece (best slack " + std::to_string(p.slack) + ")");
        out.anchors.push_back(p);
    }
    return out;
}

}  // namespace ct
