#include <cmath>

#include "ct/errors.hpp"
#include "ct/instances.hpp"
#include "ct/oracle.hpp"
#include "ct/piercing.hpp"
#include "ct/random.hpp"
#include "doctest.h"

using namespace ct;

namespace {

bool in_canonical(const PentagonFrame& f, Point p) { return canonical_pentagon().contains(f.inverse(p), Tolerance{1e-9, 0}); }

ColoredInstance seeded(const Body& k, std::vector<std::size_t> sizes, std::uint64_t seed, double spread = 2.0) {
    InstanceSpec spec{k, std::move(sizes)};
    spec.seed = seed;
    spec.spread = spread;
    return generate(spec);
}

}  // namespace

TEST_CASE("translation strips are exact") {
    const Body k = Body::reuleaux(3, 1.0, 0.4);
    auto g = rng_stream(8);
    for (int t = 0; t < 50; ++t) {
        const Line l(Direction(uniform(g, 0, kPi)), uniform(g, -1, 1));
        const Strip s = translation_strip(k, l);
        CHECK(s.hi - s.lo == doctest::Approx(k.width(l.normal())).epsilon(1e-12));
        const Point u = s.normal.unit(), v{-u.y, u.x};
        const double along = uniform(g, -2, 2);
        for (double off : {s.lo, s.hi}) {
            const TranslateSet at{std::make_shared<Body>(k), off * u + along * v};
            CHECK(line_meets(l, at));
        }
        for (double off : {s.lo - 1e-6, s.hi + 1e-6}) {
            const TranslateSet out{std::make_shared<Body>(k), off * u + along * v};
            CHECK_FALSE(line_meets(l, out));
        }
    }
}

TEST_CASE("confinement_region examples") {
    const Body disk = Body::disk(0.5);
    const auto sq = confinement_region(disk, {Line(Direction(0), 0.5), Line(Direction(kPi / 2), 0.5)});
    CHECK(sq.area() == doctest::Approx(1.0));
    CHECK(sq.contains({0, 0}));
    CHECK(sq.contains({1, 1}));
    CHECK_FALSE(sq.contains({1.1, 0.5}));

    // A polygon normalized to inner radius 1, outer radius 2.
    const auto rep = normalize_inner_outer(Body::polygon(ConvexPolygon({{0, 0}, {6, 0}, {0, 3}})), NormalizationMode::john);
    const double s = 1 / rep.inner.radius;
    const Body k = rep.body.transformed(Mat2{s, 0, 0, s});
    const auto rect = confinement_region(k, {Line(Direction(0.3), 0.0), Line(Direction(0.3 + kPi / 2), 1.0)});
    CHECK(rect.area() == doctest::Approx(k.width(Direction(0.3)) * k.width(Direction(0.3 + kPi / 2))));
    CHECK(k.width(Direction(0.3)) <= 4 + 1e-9);
    CHECK(k.width(Direction(0.3 + kPi / 2)) <= 4 + 1e-9);

    CHECK_THROWS_AS(confinement_region(disk, {Line(Direction(0), 0), Line(Direction(0), 3)}), EmptyRegion);
}

TEST_CASE("pentagon confinement from three strips") {
    const Body disk = Body::disk(0.5);
    const Line x(Direction(0), 0), y(Direction(kPi / 2), 0);
    // Diagonal strip low enough: the canonical pentagon holds the region.
    const auto low = confinement_region(disk, {x, y, Line(Direction(kPi / 4), -0.25)});
    const auto f = place_pentagon(low.vertices(), 0, 1.0);
    REQUIRE(f);
    CHECK_FALSE(f->mirrored);
    for (const Point& v : low.vertices()) CHECK(in_canonical(*f, v));
    const auto high = confinement_region(disk, {x, y, Line(Direction(kPi / 4), 0.25)});
    const auto m = place_pentagon(high.vertices(), 0, 1.0);
    REQUIRE(m);
    CHECK(m->mirrored);
    for (const Point& v : high.vertices()) CHECK(in_canonical(*m, v));
    // Three lines through one point leave a hexagon that neither pentagon holds.
    const auto hex = confinement_region(disk, {x, y, Line(Direction(kPi / 4), 0)});
    CHECK(hex.size() == 6);
    CHECK_FALSE(place_pentagon(hex.vertices(), 0, 1.0));
}

TEST_CASE("place_pentagon keeps every point inside") {
    auto g = rng_stream(21);
    int placed = 0;
    for (int t = 0; t < 100; ++t) {
        const double a = uniform(g, 0, kPi);
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({uniform(g, 0, 0.8), uniform(g, 0, 0.8)});
        const auto f = place_pentagon(pts, a, 1.0);
        if (!f) continue;
        ++placed;
        for (const Point& p : pts) CHECK(in_canonical(*f, p));
    }
    CHECK(placed > 20);
}

TEST_CASE("cw3 examples") {
    const Body reu = Body::reuleaux(3, 1.0);
    const auto single = ColoredInstance::translates(reu, {{{0, 0}}, {{0, 0}}});
    const auto c = pierce_cw_one_family(single);
    CHECK(c.points.size() <= 3);
    CHECK(verify_certificate(c, single).ok);

    for (std::uint64_t s = 0; s < 12; ++s) {
        const auto inst = seeded(s % 2 ? reu : Body::reuleaux(5, 1.0, 0.3), {6, 6}, s);
        const auto cert = pierce_cw_one_family(inst);
        CHECK(cert.points.size() <= 3);
        CHECK(verify_certificate(cert, inst).ok);
        CHECK(piercing_bounds(inst, scope_refs(inst, cert), 3).lower <= 3);
    }
    const auto square = ColoredInstance::translates(Body::polygon(ConvexPolygon::box(0, 0, 1, 1)), {{{0, 0}}, {{0, 0}}});
    CHECK_THROWS_AS(pierce_cw_one_family(square), NotConstantWidth);
    CHECK_THROWS_AS(pierce_cw_one_family(canonical("kkm-center-pierce")), ValidationError);
}

TEST_CASE("anchor duality on the pentagon pieces") {
    const auto inst = canonical("reuleaux-pair");
    const auto cert = pierce_cw_one_family(inst);
    REQUIRE(cert.frame);
    REQUIRE(cert.points.size() == 3);
    if (cert.provenance.rfind("pentagon", 0) == 0) {
        const auto pieces = pentagon_pieces();
        for (std::size_t k = 0; k < 3; ++k)
            for (int i = 0; i <= 20; ++i)
                for (int j = 0; j <= 20; ++j) {
                    const Point x{i / 20.0, j / 20.0};
                    if (!pieces[k].contains(x)) continue;
                    CHECK(inst.body().contains(cert.points[k] - (*cert.frame)(x)));
                }
    }
}

TEST_CASE("neardisk3 examples") {
    const auto disk = ColoredInstance::translates(Body::disk(0.5), {{{0, 0}, {0.3, 0.2}}, {{0.1, -0.4}}});
    const auto c = pierce_near_disk_one_family(disk);
    CHECK(c.points.size() == 3);
    CHECK(verify_certificate(c, disk).ok);

    const Body gon = Body::polygon(ConvexPolygon::regular(12, 0.5));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto inst = seeded(gon, {5, 7}, s);
        const auto cert = pierce_near_disk_one_family(inst);
        CHECK(cert.points.size() <= 3);
        CHECK(verify_certificate(cert, inst).ok);
    }
    const auto sq = ColoredInstance::translates(Body::polygon(ConvexPolygon::box(0, 0, 1, 1)), {{{0, 0}}, {{0, 0}}});
    CHECK_THROWS_AS(pierce_near_disk_one_family(sq), NotNearDisk);
}

TEST_CASE("general8 examples") {
    const auto disk = ColoredInstance::translates(Body::disk(1.0), {{{0, 0}, {1, 1}}, {{0.5, 0.5}}});
    const auto c = pierce_general_8(disk);
    CHECK(c.points.size() == 8);
    CHECK(verify_certificate(c, disk).ok);
    const Body hex = Body::polygon(ConvexPolygon::regular(6, 0.5));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto inst = seeded(hex, {6, 4}, s);
        const auto cert = pierce_general_8(inst);
        CHECK(cert.points.size() <= 8);
        CHECK(verify_certificate(cert, inst).ok);
    }
}

TEST_CASE("general9 examples") {
    auto g = rng_stream(3);
    const Body hex = Body::polygon(random_convex_polygon(g, 6));
    const auto same = ColoredInstance::translates(hex, {{{1, 1}, {1, 1}}, {{1, 1}}});
    const auto c = pierce_general(same);
    CHECK(c.points.size() <= 9);
    CHECK(c.scope == Scope::others);
    CHECK(verify_certificate(c, same).ok);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Body k = Body::polygon(random_convex_polygon(g, 6));
        const auto inst = seeded(k, {1 + s % 5, 4, 2}, s);
        const auto cert = pierce_general(inst);
        CHECK(cert.points.size() <= 9);
        CHECK(verify_certificate(cert, inst).ok);
    }
    const auto disks = seeded(Body::disk(0.5), {5, 5}, 17);
    const auto cert = pierce_general(disks);
    CHECK(verify_certificate(cert, disks).ok);
    CHECK(piercing_bounds(disks, scope_refs(disks, cert), 4).upper <= 3);
}

TEST_CASE("cw4 examples") {
    const auto reu = ColoredInstance::translates(Body::reuleaux(3, 1.0), {{{0, 0}}, {{0.2, 0.1}}});
    const auto c = pierce_constant_width_union(reu);
    CHECK(c.points.size() == 4);
    CHECK(verify_certificate(c, reu).ok);
    const auto disk = ColoredInstance::translates(Body::disk(1.0), {{{0, 0}}, {{0, 0}}});
    CHECK(pierce_constant_width_union(disk).points.size() == 4);
    for (std::uint64_t s = 0; s < 15; ++s) {
        const auto inst = seeded(Body::reuleaux(5, 1.0, 0.1), {3, 4, 2}, s);
        const auto cert = pierce_constant_width_union(inst);
        CHECK(cert.points.size() <= 4);
        CHECK(verify_certificate(cert, inst).ok);
    }
}

TEST_CASE("verify_certificate reports the first failure") {
    const auto inst = canonical("reuleaux-pair");
    auto cert = pierce_cw_one_family(inst);
    REQUIRE(verify_certificate(cert, inst).ok);

    PiercingCertificate two{0, Scope::family, {{0, 0}, {10, 10}}, "manual", "test", 3, {}, {}, {}};
    const auto far = ColoredInstance::translates(Body::disk(0.5), {{{0, 0}, {10, 10}}, {{5, 5}}});
    CHECK(verify_certificate(two, far).ok);
    two.points.pop_back();
    const auto v = verify_certificate(two, far);
    CHECK_FALSE(v.ok);
    CHECK(v.failure == "set (0, 1) is not pierced");

    // A point on the boundary, then the set moved away by 10 eps.
    PiercingCertificate edge{0, Scope::family, {{0.5, 0}}, "manual", "test", 1, {}, {}, {}};
    const auto touching = ColoredInstance::translates(Body::disk(0.5), {{{0, 0}}, {{0, 0}}});
    CHECK(verify_certificate(edge, touching).ok);
    const auto moved = ColoredInstance::translates(Body::disk(0.5), {{{-1e-8, 0}}, {{0, 0}}});
    const auto a = verify_certificate(edge, moved);
    const auto b = verify_certificate(edge, moved);
    CHECK_FALSE(a.ok);
    CHECK(a.failure == b.failure);

    PiercingCertificate greedy{0, Scope::family, {{0, 0}, {0, 0}}, "manual", "test", 1, {}, {}, {}};
    CHECK_FALSE(verify_certificate(greedy, touching).ok);
}

TEST_CASE("verify_certificate on KKM certificates") {
    const auto inst = canonical("kkm-center-pierce");
    CHECK(verify_certificate(KkmCertificate{PiercePoint{0, {0, 0}}}, inst).ok);
    CHECK_FALSE(verify_certificate(KkmCertificate{PiercePoint{1, {0, 0}}}, inst).ok);
    const TwoLines diagonals{Line::through({-1, -1}, {1, 1}), Line::through({-1, 1}, {1, -1})};
    CHECK(verify_certificate(KkmCertificate{diagonals}, inst).ok);
    const auto one = verify_certificate(KkmCertificate{TwoLines{diagonals.first, std::nullopt}}, inst);
    CHECK_FALSE(one.ok);
    CHECK(one.failure == "set (0, 1) misses both lines");
}
