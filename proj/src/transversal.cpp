#include "ct/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ct {

Interval projection_interval(const TranslateSet& s, Direction d) {
    const Point u = d.unit();
    return {-s.support(-u), s.support(u)};
}

Interval projection_interval(const ConvexPolygon& p, Direction d) {
    const Point u = d.unit();
    return {-p.support(-u), p.support(u)};
}

namespace {

std::optional<Line> common_line(const std::vector<Interval>& iv, Direction d, const Tolerance& tol) {
    if (iv.empty()) return std::nullopt;
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    for (const Interval& i : iv) {
        lo = std::max(lo, i.lo);
        hi = std::min(hi, i.hi);
    }
    if (lo > hi + tol.eps_geom) return std::nullopt;
    return Line(d, (lo + hi) / 2.0);
}

std::vector<SetRef> family_refs(const ColoredInstance& inst, std::size_t i) {
    std::vector<SetRef> out;
    for (std::size_t k = 0; k < inst.size(i); ++k) out.push_back({i, k});
    return out;
}

// The pair (a, b) of a family with hi_a < lo_b, extremal in direction theta.
std::optional<std::pair<SetRef, SetRef>> separated_pair(const ColoredInstance& inst, std::size_t i, double theta,
                                                        const Tolerance& tol) {
    const Direction d(theta);
    SetRef a{i, 0}, b{i, 0};
    double hi = std::numeric_limits<double>::infinity(), lo = -hi;
    for (std::size_t k = 0; k < inst.size(i); ++k) {
        const Interval iv = projection_interval(inst.set({i, k}), d);
        if (iv.hi < hi) { hi = iv.hi; a = {i, k}; }
        if (iv.lo > lo) { lo = iv.lo; b = {i, k}; }
    }
    if (lo > hi + tol.eps_geom) return std::make_pair(a, b);
    return std::nullopt;
}

void add_wrapped(std::vector<double>& ev, double theta) { ev.push_back(wrap_angle(theta, kPi)); }

// Angles where the projections of two sets of one family start or stop overlapping.
void pair_events(const ColoredInstance& inst, SetRef ra, SetRef rb, std::vector<double>& ev) {
    const auto va = inst.vertices(ra), vb = inst.vertices(rb);
    if (!va.empty() && !vb.empty()) {
        for (const Point& p : va)
            for (const Point& q : vb) {
                const Point e = q - p;
                if (norm(e) > 0) add_wrapped(ev, std::atan2(e.y, e.x) + kPi / 2);
            }
        return;
    }
    const TranslateSet& a = inst.set(ra);
    const TranslateSet& b = inst.set(rb);
    auto g = [&](double t) {
        const Point u = unit_vector(t);
        return std::min(a.support(u) + b.support(-u), b.support(u) + a.support(-u));
    };
    constexpr int kSamples = 720;
    double prev = g(0.0);
    for (int s = 1; s <= kSamples; ++s) {
        double t1 = kTwoPi * s / kSamples;
        const double cur = g(t1);
        if ((prev < 0) != (cur < 0)) {
            double t0 = kTwoPi * (s - 1) / kSamples;
            double g0 = prev;
            for (int it = 0; it < 60; ++it) {
                const double m = (t0 + t1) / 2;
                const double gm = g(m);
                if ((gm < 0) == (g0 < 0)) { t0 = m; g0 = gm; }
                else t1 = m;
            }
            add_wrapped(ev, (t0 + t1) / 2);
        }
        prev = cur;
    }
}

void check_colors(const ColoredInstance& inst, double theta, const std::vector<std::size_t>& colors, const Tolerance& tol) {
    const std::size_t n = inst.families();
    if (colors.size() + 1 >= n) return;
    std::vector<SetRef> w;
    std::vector<std::size_t> missing;
    for (std::size_t i = 0, c = 0; i < n; ++i) {
        if (c < colors.size() && colors[c] == i) { ++c; continue; }
        missing.push_back(i);
    }
    for (std::size_t k = 0; k < 2; ++k)
        if (auto p = separated_pair(inst, missing[k], theta, tol)) {
            w.push_back(p->first);
            w.push_back(p->second);
        }
    throw HypothesisViolation("families " + std::to_string(missing[0]) + " and " + std::to_string(missing[1]) +
                                  " both lack a transversal perpendicular to theta=" + std::to_string(theta),
                              theta, w);
}

}  // namespace

std::optional<Line> direction_transversal(const ColoredInstance& inst, const std::vector<SetRef>& sets, Direction d,
                                          const Tolerance& tol) {
    std::vector<Interval> iv;
    for (const SetRef& r : sets) iv.push_back(projection_interval(inst.set(r), d));
    return common_line(iv, d, tol);
}

std::optional<Line> direction_transversal(const std::vector<ConvexPolygon>& sets, Direction d, const Tolerance& tol) {
    std::vector<Interval> iv;
    for (const ConvexPolygon& p : sets) iv.push_back(projection_interval(p, d));
    return common_line(iv, d, tol);
}

bool line_meets(const Line& l, const TranslateSet& s, const Tolerance& tol) {
    const Interval iv = projection_interval(s, l.normal());
    return iv.lo <= l.offset() + tol.eps_geom && l.offset() <= iv.hi + tol.eps_geom;
}

std::vector<std::size_t> colors_at(const ColoredInstance& inst, double theta, const Tolerance& tol) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < inst.families(); ++i)
        if (direction_transversal(inst, family_refs(inst, i), Direction(theta), tol)) out.push_back(i);
    return out;
}

std::vector<std::size_t> DirectionColoring::lookup(double theta) const {
    const double t = wrap_angle(theta, kPi);
    constexpr double kSnap = 1e-12;
    if (kPi - t <= kSnap) return event_colors.front();
    auto it = std::upper_bound(events.begin(), events.end(), t);
    std::size_t k = static_cast<std::size_t>(it - events.begin()) - 1;
    if (t - events[k] <= kSnap) return event_colors[k];
    if (k + 1 < events.size() && events[k + 1] - t <= kSnap) return event_colors[k + 1];
    return cells[k].colors;
}

bool DirectionColoring::has(double theta, std::size_t color) const {
    const auto c = lookup(theta);
    return std::binary_search(c.begin(), c.end(), color);
}

DirectionColoring color_circle(const ColoredInstance& inst, std::size_t resolution, const Tolerance& tol) {
    DirectionColoring dc;
    dc.families = inst.families();
    std::vector<double> ev;
    resolution = std::max<std::size_t>(resolution, 1);
    for (std::size_t k = 0; k < resolution; ++k) ev.push_back(kPi * static_cast<double>(k) / static_cast<double>(resolution));
    for (std::size_t i = 0; i < inst.families(); ++i)
        for (std::size_t a = 0; a < inst.size(i); ++a)
            for (std::size_t b = a + 1; b < inst.size(i); ++b) pair_events(inst, {i, a}, {i, b}, ev);
    std::sort(ev.begin(), ev.end());
    std::vector<double> uniq;
    for (double t : ev)
        if (t < kPi && (uniq.empty() || t - uniq.back() > 1e-13)) uniq.push_back(t);
    dc.events = std::move(uniq);

    for (std::size_t k = 0; k < dc.events.size(); ++k) {
        const double t = dc.events[k];
        auto c = colors_at(inst, t, tol);
        check_colors(inst, t, c, tol);
        dc.event_colors.push_back(std::move(c));
        const double hi = k + 1 < dc.events.size() ? dc.events[k + 1] : kPi;
        DirectionColoring::Cell cell{t, hi, {}, {}};
        const double mid = (t + hi) / 2;
        for (std::size_t i = 0; i < inst.families(); ++i) {
            auto l = direction_transversal(inst, family_refs(inst, i), Direction(mid), tol);
            if (l) cell.colors.push_back(i);
            cell.witnesses.push_back(l);
        }
        check_colors(inst, mid, cell.colors, tol);
        dc.cells.push_back(std::move(cell));
    }
    return dc;
}

std::vector<double> all_colored_angles(const DirectionColoring& dc) {
    std::vector<double> out;
    for (std::size_t k = 0; k < dc.events.size(); ++k) {
        if (dc.event_colors[k].size() == dc.families) out.push_back(dc.events[k]);
        else if (dc.cells[k].colors.size() == dc.families) out.push_back((dc.cells[k].lo + dc.cells[k].hi) / 2);
    }
    return out;
}

SweepOutcome sweep_special_vch(const ColoredInstance& inst, const Tolerance& tol, std::size_t resolution) {
    const DirectionColoring dc = color_circle(inst, resolution, tol);
    const auto all = inst.refs();
    // Cross-family projections always overlap under the hypothesis, so a
    // direction colored by every family carries a line for the whole union.
    for (double t : all_colored_angles(dc))
        if (auto l = direction_transversal(inst, all, Direction(t), tol)) return UnionTransversal{*l};

    PairwiseIndex out;
    std::vector<std::size_t> seen;
    auto note = [&](const std::vector<std::size_t>& colors) {
        for (std::size_t i = 0; i < dc.families; ++i)
            if (!std::binary_search(colors.begin(), colors.end(), i) &&
                std::find(seen.begin(), seen.end(), i) == seen.end())
                seen.push_back(i);
    };
    for (std::size_t k = 0; k < dc.events.size(); ++k) {
        note(dc.event_colors[k]);
        note(dc.cells[k].colors);
    }
    std::sort(seen.begin(), seen.end());
    out.j = seen.empty() ? 0 : seen.front();
    if (seen.size() > 1)
        out.warnings.push_back("more than one family is separated somewhere; taking the lowest index " +
                               std::to_string(out.j));
    const auto rest = inst.refs_except(out.j);
    if (rest.size() <= 40) {
        bool ok = true;
        for (std::size_t a = 0; a < rest.size() && ok; ++a)
            for (std::size_t b = a + 1; b < rest.size() && ok; ++b) ok = inst.intersects(rest[a], rest[b], tol);
        out.verified = ok;
    }
    return out;
}

PentagonDirections pentagon_directions_at(const DirectionColoring& dc, double theta1) {
    // Preference order of the four 3-subsets of {0, 45, 90, 135} degrees and,
    // for each, the orthogonal pair (a, b) and the diagonal c in units of pi/4.
    struct Pick {
        int m[3];
        int a, b, c;
    };
    static constexpr Pick kPicks[] = {
        {{0, 1, 2}, 0, 2, 1},
        {{0, 1, 3}, 3, 5, 4},
        {{0, 2, 3}, 2, 4, 3},
        {{1, 2, 3}, 1, 3, 2},
    };
    for (std::size_t j = 0; j < dc.families; ++j) {
        bool colored[4];
        for (int m = 0; m < 4; ++m) colored[m] = dc.has(theta1 + m * kPi / 4, j);
        for (const Pick& p : kPicks)
            if (colored[p.m[0]] && colored[p.m[1]] && colored[p.m[2]])
                return {j, theta1 + p.a * kPi / 4, theta1 + p.b * kPi / 4, theta1 + p.c * kPi / 4};
    }
    throw NoUnionDirection("no color appears at three of the four pi/4-spaced directions");
}

PentagonDirections pick_pentagon_directions(const DirectionColoring& dc) {
    if (dc.families != 2) throw ValidationError("pentagon directions need exactly 2 families");
    const auto angles = all_colored_angles(dc);
    if (angles.empty()) throw NoUnionDirection("no direction carries both colors");
    return pentagon_directions_at(dc, angles.front());
}

OrthogonalDirections pick_orthogonal_directions(const DirectionColoring& dc) {
    const auto angles = all_colored_angles(dc);
    if (angles.empty()) throw NoUnionDirection("no direction carries every color");
    OrthogonalDirections out{0, angles.front(), angles.front() + kPi / 2};
    const auto c = dc.lookup(out.theta2);
    for (std::size_t i = 0; i < dc.families; ++i)
        if (!std::binary_search(c.begin(), c.end(), i)) {
            out.j = i;
            break;
        }
    return out;
}

}  // namespace ct
