#include <cmath>
#include <random>
#include <vector>

#include "ct/transversal.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ct;
using ct::test::random_colorful;

namespace {

ConvexPolygon sq(double x0, double y0, double x1, double y1) { return ConvexPolygon::box(x0, y0, x1, y1); }

DirectionColoring manual(std::size_t n, std::vector<std::vector<std::size_t>> at_quarter_steps) {
    DirectionColoring dc;
    dc.families = n;
    for (std::size_t k = 0; k < at_quarter_steps.size(); ++k) {
        const double lo = kPi / 4 * static_cast<double>(k);
        dc.events.push_back(lo);
        dc.event_colors.push_back(at_quarter_steps[k]);
        // Open cells keep only the colors of both endpoints.
        const auto& next = at_quarter_steps[(k + 1) % at_quarter_steps.size()];
        std::vector<std::size_t> c;
        for (std::size_t i : at_quarter_steps[k])
            if (std::find(next.begin(), next.end(), i) != next.end()) c.push_back(i);
        dc.cells.push_back({lo, lo + kPi / 4, c, {}});
    }
    return dc;
}

}  // namespace

TEST_CASE("projection_interval examples") {
    const auto inst = ColoredInstance::translates(Body::disk(1.0), {{{0, 0}}, {{0, 0}}});
    for (double t : {0.0, 1.0, 4.0}) {
        const Interval iv = projection_interval(inst.set({0, 0}), Direction(t));
        CHECK(iv.lo == doctest::Approx(-1.0));
        CHECK(iv.hi == doctest::Approx(1.0));
    }
    const Interval a = projection_interval(sq(0, 0, 1, 1), Direction(0));
    CHECK(a.lo == doctest::Approx(0.0));
    CHECK(a.hi == doctest::Approx(1.0));
    const Interval b = projection_interval(sq(0, 0, 1, 1), Direction(kPi / 4));
    CHECK(b.lo == doctest::Approx(0.0));
    CHECK(b.hi == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("direction_transversal examples") {
    auto l = direction_transversal({sq(0, 0, 1, 1), sq(0.5, 0, 1.5, 1)}, Direction(0));
    REQUIRE(l);
    CHECK(l->offset() == doctest::Approx(0.75));
    CHECK_FALSE(direction_transversal({sq(0, 0, 1, 1), sq(3, 0, 4, 1)}, Direction(0)));
    auto h = direction_transversal({sq(0, 0, 1, 1), sq(3, 0, 4, 1)}, Direction(kPi / 2));
    REQUIRE(h);
    CHECK(h->offset() == doctest::Approx(0.5));
}

TEST_CASE("check_hypothesis") {
    const auto ok = ColoredInstance::polygons({{sq(0, 0, 1, 1)}, {sq(0.5, 0.5, 2, 2), sq(-1, -1, 0, 0)}});
    CHECK(check_hypothesis(ok).ok);
    CHECK(check_hypothesis(ok).pairs_checked == 2);
    const auto bad = ColoredInstance::polygons({{sq(0, 0, 1, 1)}, {sq(2, 2, 3, 3)}});
    const auto rep = check_hypothesis(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].second == SetRef{1, 0});
    CHECK_THROWS_AS(ColoredInstance::polygons({{sq(0, 0, 1, 1)}}), ValidationError);
    CHECK_THROWS_AS(ColoredInstance::polygons({{sq(0, 0, 1, 1)}, {}}), EmptyInput);
}

TEST_CASE("sets_intersect for curved sets with different bodies") {
    const TranslateSet a{std::make_shared<const Body>(Body::disk(1.0)), {0, 0}};
    const TranslateSet b{std::make_shared<const Body>(Body::reuleaux(3, 1.0)), {1.0 + 1.0 / std::sqrt(3.0) - 1e-6, 0}};
    // Rotated by pi/2 a corner points toward the disk.
    const TranslateSet c{std::make_shared<const Body>(Body::reuleaux(3, 1.0, kPi / 2)), {1.0 + 1.0 / std::sqrt(3.0) - 1e-6, 0}};
    CHECK(sets_intersect(a, c));
    CHECK_FALSE(sets_intersect(a, b));
}

TEST_CASE("color_circle examples") {
    SUBCASE("identical disks are colored everywhere") {
        const auto inst = ColoredInstance::translates(Body::disk(1.0), {{{0, 0}}, {{0, 0}}});
        const auto dc = color_circle(inst, 64);
        for (const auto& c : dc.cells) CHECK(c.colors.size() == 2);
        for (const auto& c : dc.event_colors) CHECK(c.size() == 2);
    }
    SUBCASE("two far squares and one big square") {
        const auto inst = ColoredInstance::polygons({{sq(0, 0, 1, 1), sq(5, 0, 6, 1)}, {sq(-1, -1, 7, 2)}});
        const auto dc = color_circle(inst, 64);
        CHECK(dc.lookup(0.0) == std::vector<std::size_t>{1});
        CHECK(dc.lookup(kPi / 2) == std::vector<std::size_t>{0, 1});
        for (std::size_t k = 0; k < dc.cells.size(); ++k)
            for (std::size_t i = 0; i < 2; ++i)
                if (auto& w = dc.cells[k].witnesses[i])
                    for (std::size_t s = 0; s < inst.size(i); ++s) CHECK(line_meets(*w, inst.set({i, s})));
    }
    SUBCASE("cross-separated pairs in two families") {
        const auto inst = ColoredInstance::polygons(
            {{sq(0, 0, 1, 1), sq(3, 0, 4, 1)}, {sq(0, 3, 1, 4), sq(3, 3, 4, 4)}});
        try {
            color_circle(inst, 16);
            FAIL("expected HypothesisViolation");
        } catch (const HypothesisViolation& e) {
            CHECK(e.witnesses().size() == 4);
        }
    }
}

TEST_CASE("coloring is stable under refinement at event angles") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 20; ++t) {
        const auto inst = random_colorful(rng, 2);
        const auto a = color_circle(inst, 45), b = color_circle(inst, 90);
        for (std::size_t k = 0; k < a.events.size(); ++k) CHECK(b.lookup(a.events[k]) == a.event_colors[k]);
    }
}

TEST_CASE("sweep_special_vch examples") {
    const auto shared = ColoredInstance::polygons({{sq(-1, -1, 1, 1), sq(0, 0, 2, 2)}, {sq(-2, -2, 0, 0)}});
    CHECK(std::holds_alternative<UnionTransversal>(sweep_special_vch(shared)));
    const auto disks = ColoredInstance::translates(Body::disk(1.0), {{{0, 0}}, {{0, 0}}});
    CHECK(std::holds_alternative<UnionTransversal>(sweep_special_vch(disks)));

    // Three small squares at the corners of a triangle, one big triangle
    // meeting all of them: no line meets the union.
    const double e = 0.05;
    const auto tri = ColoredInstance::polygons(
        {{sq(-e, -e, e, e), sq(4 - e, -e, 4 + e, e), sq(2 - e, 3 - e, 2 + e, 3 + e)},
         {ConvexPolygon({{0, 0}, {4, 0}, {2, 3}})}});
    const auto out = sweep_special_vch(tri);
    REQUIRE(std::holds_alternative<PairwiseIndex>(out));
    CHECK(std::get<PairwiseIndex>(out).j == 0);
    CHECK(std::get<PairwiseIndex>(out).verified == std::optional<bool>(true));
}

TEST_CASE("sweep dichotomy on seeded instances") {
    std::mt19937_64 rng(4242);
    int unions = 0, indices = 0;
    for (int t = 0; t < 150; ++t) {
        const auto inst = random_colorful(rng, 2 + t % 2);
        REQUIRE(check_hypothesis(inst).ok);
        const auto out = sweep_special_vch(inst);
        if (const auto* u = std::get_if<UnionTransversal>(&out)) {
            ++unions;
            for (const SetRef& r : inst.refs()) CHECK(line_meets(u->line, inst.set(r)));
        } else {
            ++indices;
            const auto& p = std::get<PairwiseIndex>(out);
            const auto rest = inst.refs_except(p.j);
            for (std::size_t a = 0; a < rest.size(); ++a)
                for (std::size_t b = a + 1; b < rest.size(); ++b) CHECK(inst.intersects(rest[a], rest[b]));
        }
    }
    CHECK(unions > 0);
    CHECK(indices > 0);
}

TEST_CASE("pick_pentagon_directions examples") {
    const auto every = manual(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    const auto p = pick_pentagon_directions(every);
    CHECK(p.j == 0);
    CHECK(p.a == doctest::Approx(0.0));
    CHECK(p.b == doctest::Approx(kPi / 2));
    CHECK(p.c == doctest::Approx(kPi / 4));

    const auto mixed = manual(2, {{0, 1}, {0}, {1}, {0}});
    const auto q = pick_pentagon_directions(mixed);
    CHECK(q.j == 0);
    CHECK(q.a == doctest::Approx(3 * kPi / 4));
    CHECK(q.b == doctest::Approx(5 * kPi / 4));
    CHECK(q.c == doctest::Approx(kPi));

    CHECK_THROWS_AS(pick_pentagon_directions(manual(2, {{0}, {1}, {0}, {1}})), NoUnionDirection);
}

TEST_CASE("pigeonhole over the four pi/4-spaced directions is exhaustive") {
    const std::vector<std::vector<std::size_t>> options{{0}, {1}, {0, 1}};
    for (const auto& c1 : options)
        for (const auto& c2 : options)
            for (const auto& c3 : options) {
                const auto dc = manual(2, {{0, 1}, c1, c2, c3});
                const auto p = pentagon_directions_at(dc, 0.0);
                CHECK(std::abs(p.b - p.a - kPi / 2) < 1e-12);
                CHECK(std::abs(p.c - p.a - kPi / 4) < 1e-12);
                for (double t : {p.a, p.b, p.c}) CHECK(dc.has(t, p.j));
            }
}

TEST_CASE("pick_orthogonal_directions examples") {
    const auto every = manual(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    const auto a = pick_orthogonal_directions(every);
    CHECK(a.theta1 == doctest::Approx(0.0));
    CHECK(a.theta2 == doctest::Approx(kPi / 2));
    const auto miss = manual(3, {{0, 1, 2}, {0, 2}, {0, 2}, {0, 1}});
    const auto b = pick_orthogonal_directions(miss);
    CHECK(b.j == 1);
    CHECK(b.theta1 == doctest::Approx(0.0));
    CHECK(b.theta2 == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(pick_orthogonal_directions(manual(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}})), NoUnionDirection);
}
