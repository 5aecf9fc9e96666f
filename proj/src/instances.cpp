#include "ct/instances.hpp"

#include <algorithm>
#include <cmath>

#include "ct/errors.hpp"
#include "ct/random.hpp"

namespace ct {

namespace {

double circumradius(const Body& k) {
    double r = 0;
    for (int i = 0; i < 64; ++i) r = std::max(r, norm(k.support_point(unit_vector(kTwoPi * i / 64)) - k.origin()));
    return r;
}

// Largest lambda in [0, 1] with lambda d inside the difference body, shrunk
// a little so the exact check passes.
double gauge_fraction(const Body& diff, Point d) {
    if (diff.violation(d) <= 0) return 1.0;
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
        const double mid = (lo + hi) / 2;
        (diff.violation(mid * d) <= 0 ? lo : hi) = mid;
    }
    return lo * (1 - 1e-7);
}

bool pull_together(const Body& diff, Point& a, Point& b) {
    const Point d = b - a;
    const double lam = gauge_fraction(diff, d);
    if (lam >= 1.0) return false;
    const Point m = (a + b) / 2.0;
    a = m - (lam / 2) * d;
    b = m + (lam / 2) * d;
    return true;
}

std::vector<Point> sample(std::mt19937_64& g, std::size_t m, PlacementLaw placement, double half) {
    std::vector<Point> out;
    std::vector<Point> clusters;
    for (int c = 0; c < 3; ++c) clusters.push_back({uniform(g, -half, half), uniform(g, -half, half)});
    for (std::size_t i = 0; i < m; ++i) {
        if (placement == PlacementLaw::uniform) {
            out.push_back({uniform(g, -half, half), uniform(g, -half, half)});
        } else {
            const Point c = clusters[uniform_index(g, clusters.size())];
            out.push_back(c + Point{uniform(g, -0.15, 0.15) * half, uniform(g, -0.15, 0.15) * half});
        }
    }
    return out;
}

}  // namespace

ColoredInstance generate(const InstanceSpec& spec) {
    if (spec.sizes.size() < 2) throw ValidationError("an instance needs at least 2 families");
    const Body diff = difference_body(spec.body);
    const double half = spec.spread * circumradius(spec.body);
    auto g = rng_stream(spec.seed);
    for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
        std::vector<std::vector<Point>> shifts;
        for (std::size_t m : spec.sizes) shifts.push_back(sample(g, m, spec.placement, half));
        bool clean = false;
        for (std::size_t round = 0; round < spec.max_rounds && !clean; ++round) {
            clean = true;
            for (std::size_t i = 0; i < shifts.size(); ++i)
                for (std::size_t j = i + 1; j < shifts.size(); ++j)
                    for (Point& a : shifts[i])
                        for (Point& b : shifts[j])
                            if (pull_together(diff, a, b)) clean = false;
        }
        if (!clean) continue;
        auto inst = ColoredInstance::translates(spec.body, shifts);
        if (check_hypothesis(inst).ok) return inst;
    }
    throw GenerationFailed("no valid instance after " + std::to_string(spec.max_attempts) + " attempts");
}

ColoredInstance generate_polygons(std::size_t n, std::size_t max_size, std::uint64_t seed) {
    auto g = rng_stream(seed);
    std::vector<std::vector<ConvexPolygon>> fams(n);
    const Point hub{uniform(g, -0.3, 0.3), uniform(g, -0.3, 0.3)};
    std::vector<Point> anchors;
    const std::size_t m0 = 1 + uniform_index(g, max_size);
    for (std::size_t k = 0; k < m0; ++k) {
        const Point c{uniform(g, -1, 1), uniform(g, -1, 1)};
        const double r = uniform(g, 0.05, 0.35);
        fams[0].push_back(ConvexPolygon::regular(5, r, uniform(g, 0, kTwoPi)).translated(c));
        anchors.push_back(c);
    }
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t m = 1 + uniform_index(g, max_size);
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Point> pts = anchors;
            pts.push_back(hub);
            pts.push_back({uniform(g, -1, 1), uniform(g, -1, 1)});
            pts.push_back(hub + Point{0.05, 0});
            pts.push_back(hub + Point{0, 0.05});
            fams[i].push_back(ConvexPolygon::hull(pts));
        }
    }
    return ColoredInstance::polygons(std::move(fams));
}

std::vector<Point> pairwise_translates(const Body& k, std::size_t m, std::uint64_t seed, double spread) {
    const Body diff = difference_body(k);
    auto g = rng_stream(seed);
    auto pts = sample(g, m, PlacementLaw::uniform, spread * circumradius(k));
    for (std::size_t round = 0; round < 1000; ++round) {
        bool clean = true;
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                if (pull_together(diff, pts[a], pts[b])) clean = false;
        if (clean) return pts;
    }
    throw GenerationFailed("pairwise repair did not settle");
}

std::vector<AxisBox> pairwise_boxes(std::size_t m, std::uint64_t seed) {
    auto g = rng_stream(seed);
    std::vector<AxisBox> boxes;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = uniform(g, -4, 4), y = uniform(g, -4, 4);
        boxes.push_back({x, y, x + uniform(g, 0.1, 2), y + uniform(g, 0.1, 2)});
    }
    // Growing boxes never breaks an intersection, so one pass suffices.
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            AxisBox& p = boxes[a];
            AxisBox& q = boxes[b];
            if (p.x1 < q.x0) p.x1 = q.x0 = (p.x1 + q.x0) / 2;
            if (q.x1 < p.x0) q.x1 = p.x0 = (q.x1 + p.x0) / 2;
            if (p.y1 < q.y0) p.y1 = q.y0 = (p.y1 + q.y0) / 2;
            if (q.y1 < p.y0) q.y1 = p.y0 = (q.y1 + p.y0) / 2;
        }
    return boxes;
}

ConvexPolygon random_convex_polygon(std::mt19937_64& g, std::size_t sides, double radius) {
    for (;;) {
        std::vector<double> ang;
        for (std::size_t i = 0; i < sides; ++i) ang.push_back(uniform(g, 0, kTwoPi));
        std::sort(ang.begin(), ang.end());
        std::vector<Point> pts;
        for (double a : ang) pts.push_back(uniform(g, 0.7, 1.0) * radius * unit_vector(a));
        const auto h = convex_hull(pts);
        if (h.size() != sides) continue;
        bool fat = true;
        for (std::size_t i = 0; i < sides; ++i) {
            const double gap = i + 1 < sides ? ang[i + 1] - ang[i] : ang[0] + kTwoPi - ang[i];
            fat = fat && gap < kPi * 0.8 && gap > 0.05;
        }
        if (fat) return ConvexPolygon(h);
    }
}

namespace {

ConvexPolygon half_disk(double sign) {
    std::vector<Point> v;
    for (int k = 0; k <= 16; ++k) v.push_back(0.9 * unit_vector(kPi / 2 + sign * kPi * k / 16));
    v.push_back({-0.1 * sign, -0.9});
    v.push_back({-0.1 * sign, 0.9});
    return ConvexPolygon::hull(v);
}

ConvexPolygon square_at(Point c, double h) { return ConvexPolygon::box(c.x - h, c.y - h, c.x + h, c.y + h); }

}  // namespace

const std::vector<std::string>& canonical_names() {
    static const std::vector<std::string> names{"kkm-center-pierce", "pairwise-triangle-needs-2", "four-corner-squares",
                                                "reuleaux-pair",     "kkm-half-disks",            "sweep-pairwise-index",
                                                "all-origin"};
    return names;
}

ColoredInstance canonical(const std::string& name) {
    if (name == "kkm-center-pierce") {
        std::vector<ConvexPolygon> small;
        for (double a : {45.0, 135.0, 225.0, 315.0}) small.push_back(square_at(0.8 * unit_vector(a * kPi / 180), 0.05));
        return ColoredInstance::polygons({small, {ConvexPolygon::box(-0.6, -0.6, 0.6, 0.6)}});
    }
    if (name == "pairwise-triangle-needs-2") {
        const Body tri = Body::polygon(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}));
        return ColoredInstance::translates(tri, {{{0, 0}, {0.9, 0}, {0, 0.9}}, {{0.45, 0.45}}});
    }
    if (name == "four-corner-squares") {
        std::vector<ConvexPolygon> corners;
        for (Point c : {Point{3, 3}, Point{-3, 3}, Point{-3, -3}, Point{3, -3}}) corners.push_back(square_at(c, 0.5));
        return ColoredInstance::polygons({corners, {ConvexPolygon::box(-3, -3, 3, 3)}});
    }
    if (name == "reuleaux-pair")
        return ColoredInstance::translates(Body::reuleaux(3, 1.0),
                                           {{{0, 0}, {0.4, 0}, {0.2, 0.3}}, {{0.2, 0.1}, {-0.2, 0.2}, {0.5, 0.3}}});
    if (name == "kkm-half-disks")
        return ColoredInstance::polygons({{half_disk(1), half_disk(-1)}, {half_disk(1), half_disk(-1)}});
    if (name == "sweep-pairwise-index") {
        const double e = 0.05;
        return ColoredInstance::polygons({{square_at({0, 0}, e), square_at({4, 0}, e), square_at({2, 3}, e)},
                                          {ConvexPolygon({{0, 0}, {4, 0}, {2, 3}})}});
    }
    if (name == "all-origin")
        return ColoredInstance::translates(Body::disk(0.5), {{{0, 0}, {0, 0}, {0, 0}}, {{0, 0}, {0, 0}, {0, 0}}});
    throw UnknownFixture("unknown fixture '" + name + "'");
}

}  // namespace ct
