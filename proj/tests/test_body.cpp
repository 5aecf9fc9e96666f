#include <cmath>
#include <random>
#include <vector>

#include "ct/body.hpp"
#include "ct/errors.hpp"
#include "doctest.h"

using namespace ct;

namespace {

ConvexPolygon random_convex(std::mt19937_64& rng, std::size_t n, double r = 1.0) {
    std::uniform_real_distribution<double> u(-r, r);
    for (;;) {
        std::vector<Point> pts(n * 3);
        for (Point& p : pts) p = {u(rng), u(rng)};
        auto h = convex_hull(pts);
        if (h.size() >= n) {
            h.resize(n);
            auto hh = convex_hull(h);
            if (hh.size() >= 3) return ConvexPolygon(hh);
        }
    }
}

// Brute-force oracle: hull of all pairwise vertex sums.
std::vector<Point> brute_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
    std::vector<Point> s;
    for (const Point& p : a.vertices())
        for (const Point& q : b.vertices()) s.push_back(p + q);
    return convex_hull(s);
}

}  // namespace

TEST_CASE("support examples") {
    const Body d = Body::disk(1.0);
    for (double t : {0.0, 0.7, 2.0, 5.5}) CHECK(d.support(Direction(t)) == doctest::Approx(1.0));
    const Body sq = Body::polygon(ConvexPolygon::box(0, 0, 1, 1));
    CHECK(sq.support(Direction(0)) == doctest::Approx(1.0));
    const Body r = Body::reuleaux(3, 1.0);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int i = 0; i < 100; ++i) CHECK(r.width(Direction(u(rng))) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Reuleaux polygons have constant width on a dense grid") {
    for (int arms : {3, 5, 7}) {
        const Body r = Body::reuleaux(arms, 1.3, 0.4, {0.2, -0.1});
        for (int i = 0; i < 2000; ++i) CHECK(std::abs(r.width(Direction(kPi * i / 2000)) - 1.3) < 1e-9);
        REQUIRE(r.constant_width());
        // Support points are boundary points of the intersection of corner disks.
        for (int i = 0; i < 64; ++i) {
            const Point u = unit_vector(kTwoPi * i / 64);
            CHECK(std::abs(r.violation(r.support_point(u))) < 1e-9);
            CHECK(dot(r.support_point(u), u) == doctest::Approx(r.support(u)));
        }
    }
}

TEST_CASE("support is the vertex maximum and adds under Minkowski sums") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, kTwoPi);
    for (int t = 0; t < 50; ++t) {
        const ConvexPolygon a = random_convex(rng, 5), b = random_convex(rng, 6);
        const ConvexPolygon s = minkowski_sum(a, b);
        for (int k = 0; k < 20; ++k) {
            const Point d = unit_vector(u(rng));
            double m = -INFINITY;
            for (const Point& v : a.vertices()) m = std::max(m, dot(v, d));
            CHECK(std::abs(a.support(d) - m) < 1e-12);
            CHECK(std::abs(s.support(d) - a.support(d) - b.support(d)) < 1e-9);
        }
    }
}

TEST_CASE("minkowski_sum examples") {
    const auto sq = ConvexPolygon::box(0, 0, 1, 1);
    const std::vector<Point> zero{{0, 0}, {0, 0}, {0, 0}};
    const auto id = minkowski_sum(std::span(sq.vertices()), std::span(zero));
    CHECK(id.size() == 4);
    CHECK(std::abs(polygon_area(id) - 1.0) < 1e-12);
    const auto two = minkowski_sum(sq, sq);
    CHECK(two.size() == 4);
    CHECK(two.area() == doctest::Approx(4.0));
    CHECK(two.support(Point{1, 0}) == doctest::Approx(2.0));
    CHECK(two.support(Point{-1, 0}) == doctest::Approx(0.0));

    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        const ConvexPolygon a = random_convex(rng, 5), b = random_convex(rng, 5);
        const auto s = minkowski_sum(a, b).vertices();
        const auto o = brute_sum(a, b);
        REQUIRE(s.size() == o.size());
        CHECK(std::abs(polygon_area(s) - polygon_area(o)) < 1e-9);
        for (const Point& p : o) {
            double best = INFINITY;
            for (const Point& q : s) best = std::min(best, dist(p, q));
            CHECK(best < 1e-9);
        }
    }
}

TEST_CASE("difference_body examples") {
    const Body d = difference_body(Body::disk(0.7));
    REQUIRE(std::holds_alternative<DiskShape>(d.shape()));
    CHECK(std::get<DiskShape>(d.shape()).radius == doctest::Approx(1.4));
    const Body r = difference_body(Body::reuleaux(3, 1.0));
    REQUIRE(std::holds_alternative<DiskShape>(r.shape()));
    CHECK(std::get<DiskShape>(r.shape()).radius == doctest::Approx(1.0));
    const Body s = difference_body(Body::polygon(ConvexPolygon::box(0, 0, 1, 1)));
    const auto& p = std::get<PolygonShape>(s.shape()).polygon;
    CHECK(p.size() == 4);
    CHECK(p.support(Point{1, 0}) == doctest::Approx(1.0));
    CHECK(p.support(Point{-1, 0}) == doctest::Approx(1.0));
    CHECK(p.area() == doctest::Approx(4.0));
}

TEST_CASE("difference bodies are centrally symmetric") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 20; ++t) {
        const Body k = Body::polygon(random_convex(rng, 6));
        const Body d = difference_body(k);
        for (int i = 0; i < 360; ++i) {
            const Direction a(kTwoPi * i / 360);
            CHECK(std::abs(d.support(a) - d.support(a.opposite())) < 1e-9);
        }
    }
}

TEST_CASE("translates_intersect examples and symmetry") {
    const Body half = Body::disk(0.5);
    CHECK(translates_intersect(half, {0, 0}, {1, 0}));
    CHECK_FALSE(translates_intersect(half, {0, 0}, {1.001, 0}));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    const Body k = Body::polygon(random_convex(rng, 6));
    for (int t = 0; t < 200; ++t) {
        const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
        CHECK(translates_intersect(k, a, b) == translates_intersect(k, b, a));
        // Polygon route: direct separating-axis test on the two translates.
        const auto& poly = std::get<PolygonShape>(k.shape()).polygon;
        CHECK(translates_intersect(k, a, b) == polygons_intersect(poly.translated(a), poly.translated(b)));
    }
}

TEST_CASE("Reuleaux translates_intersect agrees with dense polygon approximations") {
    const Body r = Body::reuleaux(3, 1.0);
    const ConvexPolygon inner = r.inscribed_polygon(4096), outer = r.circumscribed_polygon(4096);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-1.1, 1.1);
    int decided = 0;
    for (int t = 0; t < 500; ++t) {
        const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
        const bool in = polygons_intersect(inner.translated(a), inner.translated(b), Tolerance{0, 0});
        const bool out = polygons_intersect(outer.translated(a), outer.translated(b), Tolerance{0, 0});
        if (in == out) {
            ++decided;
            CHECK(translates_intersect(r, a, b) == in);
        }
    }
    CHECK(decided > 490);
}

TEST_CASE("normalize_inner_outer examples") {
    const auto d = normalize_inner_outer(Body::disk(1.0), NormalizationMode::near_disk);
    CHECK(d.ratio == doctest::Approx(1.0));
    CHECK(d.verified);

    // Independent radii from the three-arc description: the circumcenter is
    // at distance 1/sqrt(3) from each corner; the nearest boundary point lies
    // on the opposite arc at distance 1 - 1/sqrt(3).
    const auto r = normalize_inner_outer(Body::reuleaux(3, 1.0), NormalizationMode::constant_width);
    CHECK(r.inner.radius == doctest::Approx(1.0 - 1.0 / std::sqrt(3.0)).epsilon(1e-9));
    CHECK(r.outer.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
    CHECK(r.ratio == doctest::Approx(1.0 / (std::sqrt(3.0) - 1.0)).epsilon(1e-9));
    CHECK(r.verified);

    CHECK_THROWS_AS(normalize_inner_outer(Body::polygon(ConvexPolygon::box(0, 0, 4, 1)), NormalizationMode::near_disk),
                    NotNearDisk);
    CHECK_THROWS_AS(normalize_inner_outer(Body::polygon(ConvexPolygon::box(0, 0, 1, 1)), NormalizationMode::constant_width),
                    NotConstantWidth);
    CHECK_THROWS_AS(normalize_inner_outer(Body::polygon(ConvexPolygon::box(0, 0, 1, 1)), NormalizationMode::near_disk),
                    NotNearDisk);
    const auto g = normalize_inner_outer(Body::polygon(ConvexPolygon::regular(12, 1.0)), NormalizationMode::near_disk);
    CHECK(g.ratio == doctest::Approx(1.0 / std::cos(kPi / 12)).epsilon(1e-9));
}

TEST_CASE("john normalization keeps the ratio near 2 for elongated bodies") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50; ++t) {
        ConvexPolygon p = random_convex(rng, 6);
        std::vector<Point> v;
        for (const Point& q : p.vertices()) v.push_back({4.0 * q.x, 0.5 * q.y});
        const auto rep = normalize_inner_outer(Body::polygon(ConvexPolygon::hull(v)), NormalizationMode::john);
        CHECK(rep.verified);
        CHECK(rep.ratio <= 2.0 + 1e-6);
    }
}

TEST_CASE("sampled bodies") {
    std::vector<double> a, h;
    const Body r = Body::reuleaux(3, 1.0);
    for (int i = 0; i < 720; ++i) {
        a.push_back(kTwoPi * i / 720);
        h.push_back(r.support(Direction(a.back())));
    }
    const Body s = Body::sampled(a, h);
    CHECK(s.sampling_modulus() < 1e-4);
    CHECK(s.constant_width(1e-4));
    CHECK(difference_body(s).kind() == "disk");
    std::vector<double> hs;
    const Body sq = Body::polygon(ConvexPolygon::box(-1, -0.5, 1, 0.5));
    for (double t : a) hs.push_back(sq.support(Direction(t)));
    const Body d = difference_body(Body::sampled(a, hs));
    CHECK(d.kind() == "support");
    CHECK(d.support(Direction(0)) == doctest::Approx(2.0).epsilon(1e-3));
    std::vector<double> bad = h;
    bad[10] += 0.5;
    CHECK_THROWS_AS(Body::sampled(a, bad), ValidationError);
    CHECK_THROWS_AS(Body::sampled({0.0, 1.0}, {1.0, 1.0}), ValidationError);
}
