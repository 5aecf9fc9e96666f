#include "ct/piercing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ct/errors.hpp"
#include "ct/oracle.hpp"

namespace ct {

Strip translation_strip(const Body& k, const Line& line) {
    const Point u = line.normal().unit();
    return {line.normal(), line.offset() - k.support(u), line.offset() + k.support(-u)};
}

namespace {

std::vector<Point> clip_halfplane(const std::vector<Point>& poly, Point u, double c) {
    // Keeps {q : q . u <= c}.
    std::vector<Point> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i], q = poly[(i + 1) % poly.size()];
        const double fp = dot(p, u) - c, fq = dot(q, u) - c;
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) out.push_back(p + (fp / (fp - fq)) * (q - p));
    }
    return out;
}

}  // namespace

ConvexPolygon confinement_region(const Body& k, const std::vector<Line>& lines) {
    constexpr double kFar = 1e7;
    std::vector<Point> poly{{-kFar, -kFar}, {kFar, -kFar}, {kFar, kFar}, {-kFar, kFar}};
    for (const Line& l : lines) {
        const Strip s = translation_strip(k, l);
        const Point u = s.normal.unit();
        poly = clip_halfplane(poly, u, s.hi);
        poly = clip_halfplane(poly, -u, -s.lo);
    }
    const auto h = convex_hull(poly);
    if (h.size() < 3 || polygon_area(h) <= 0) throw EmptyRegion("the strips have no common translation vector");
    return ConvexPolygon(h);
}

std::optional<PentagonFrame> place_pentagon(const std::vector<Point>& pts, double a, double w, const Tolerance& tol) {
    if (pts.empty()) return std::nullopt;
    const Point ua = unit_vector(a), ub = unit_vector(a + kPi / 2);
    double smin = 1e300, smax = -1e300, rmin = 1e300, rmax = -1e300, dmin = 1e300, dmax = -1e300;
    for (const Point& p : pts) {
        const double s = dot(p, ua), r = dot(p, ub);
        smin = std::min(smin, s), smax = std::max(smax, s);
        rmin = std::min(rmin, r), rmax = std::max(rmax, r);
        dmin = std::min(dmin, s + r), dmax = std::max(dmax, s + r);
    }
    const double eps = tol.eps_geom * std::max(1.0, w);
    if (smax - smin > w + eps || rmax - rmin > w + eps) return std::nullopt;
    const double cut = std::sqrt(2.0) * w;
    const double slack_canonical = cut - (dmax - smin - rmin);
    const double slack_mirrored = cut - (smax + rmax - dmin);
    if (std::max(slack_canonical, slack_mirrored) < -eps) return std::nullopt;
    PentagonFrame f;
    f.scale = w;
    if (slack_canonical >= slack_mirrored) {
        f.origin = smin * ua + rmin * ub;
        f.ex = ua;
        f.ey = ub;
    } else {
        f.origin = smax * ua + rmax * ub;
        f.ex = -ua;
        f.ey = -ub;
        f.mirrored = true;
    }
    return f;
}

std::vector<SetRef> scope_refs(const ColoredInstance& inst, const PiercingCertificate& cert) {
    if (cert.scope == Scope::others) return inst.refs_except(cert.j);
    std::vector<SetRef> out;
    if (cert.j < inst.families())
        for (std::size_t k = 0; k < inst.size(cert.j); ++k) out.push_back({cert.j, k});
    return out;
}

namespace {

std::string name(SetRef r) { return "set (" + std::to_string(r.family) + ", " + std::to_string(r.index) + ")"; }

}  // namespace

Verification verify_certificate(const PiercingCertificate& cert, const ColoredInstance& inst, const Tolerance& tol) {
    if (cert.j >= inst.families()) return {false, "family index " + std::to_string(cert.j) + " out of range"};
    if (cert.bound && cert.points.size() > cert.bound)
        return {false, "uses " + std::to_string(cert.points.size()) + " points, more than the promised " +
                           std::to_string(cert.bound)};
    for (const Point& p : cert.points)
        if (!finite(p)) return {false, "non-finite point"};
    for (const SetRef& r : scope_refs(inst, cert))
        if (std::none_of(cert.points.begin(), cert.points.end(), [&](Point p) { return inst.contains(r, p, tol); }))
            return {false, name(r) + " is not pierced"};
    return {};
}

Verification verify_certificate(const KkmCertificate& cert, const ColoredInstance& inst, const Tolerance& tol) {
    if (const auto* t = std::get_if<TwoLines>(&cert)) {
        for (const SetRef& r : inst.refs()) {
            const bool hit = line_meets(t->first, inst.set(r), tol) || (t->second && line_meets(*t->second, inst.set(r), tol));
            if (!hit) return {false, name(r) + " misses both lines"};
        }
        return {};
    }
    if (const auto* p = std::get_if<PiercePoint>(&cert)) {
        if (p->j >= inst.families()) return {false, "family index " + std::to_string(p->j) + " out of range"};
        for (const SetRef& r : inst.refs_except(p->j))
            if (!inst.contains(r, p->p, tol)) return {false, name(r) + " does not contain the point"};
        return {};
    }
    return {};
}

namespace {

// Working frame: the instance mapped by a linear map, and the inner/outer
// disks of its body.
struct Frame {
    ColoredInstance inst;
    Mat2 to_work;
    Mat2 to_world;
    bool identity = true;
    Point center;
    double inner = 0.0, outer = 0.0;

    Point world(Point p) const { return identity ? p : to_world(p); }
};

Frame make_frame(const ColoredInstance& inst, NormalizationMode mode, const Tolerance& tol) {
    if (!inst.translate_mode()) throw ValidationError("piercing pipelines need translates of one body");
    const NormalizationReport rep = normalize_inner_outer(inst.body(), mode, tol);
    Frame f;
    const Mat2& m = rep.transform;
    f.identity = m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1;
    f.inst = f.identity ? inst : inst.mapped(m, {0, 0});
    f.to_work = m;
    f.to_world = m.inverse();
    f.center = rep.inner.center;
    f.inner = rep.inner.radius;
    f.outer = rep.outer.radius;
    return f;
}

std::vector<SetRef> family_refs(const ColoredInstance& inst, std::size_t j) {
    std::vector<SetRef> out;
    for (std::size_t k = 0; k < inst.size(j); ++k) out.push_back({j, k});
    return out;
}

// Angles worth trying as theta1: all-colored events, and samples inside
// every all-colored cell.
std::vector<double> theta_candidates(const DirectionColoring& dc) {
    std::vector<double> out;
    for (std::size_t k = 0; k < dc.events.size(); ++k) {
        if (dc.event_colors[k].size() == dc.families) out.push_back(dc.events[k]);
        const auto& c = dc.cells[k];
        if (c.colors.size() != dc.families) continue;
        const double hi = c.hi < c.lo ? c.hi + kPi : c.hi;
        for (int s = 1; s < 8; ++s) out.push_back(c.lo + (hi - c.lo) * s / 8);
    }
    if (out.size() > 96) {
        std::vector<double> thin;
        for (std::size_t i = 0; i < 96; ++i) thin.push_back(out[i * out.size() / 96]);
        out = thin;
    }
    return out;
}

Line world_line(const Frame& f, const Line& l) {
    if (f.identity) return l;
    const Point p = l.point(), d = l.along();
    return Line::through(f.world(p), f.world(p + d));
}

struct OneFamilyPlan {
    std::string pipeline;
    std::size_t bound = 3;
    double w = 1.0;
    // Piercing points (working coordinates) for a placed pentagon.
    std::function<std::vector<Point>(const PentagonFrame&)> cover;
};

PiercingCertificate finish(PiercingCertificate cert, const Frame& f, const ColoredInstance& world,
                           const Tolerance& tol, bool* ok) {
    for (Point& p : cert.points) p = f.world(p);
    for (Line& l : cert.lines) l = world_line(f, l);
    for (Point& p : cert.region) p = f.world(p);
    if (!f.identity) cert.frame.reset();
    *ok = verify_certificate(cert, world, tol).ok;
    return cert;
}

PiercingCertificate pentagon_pipeline(const ColoredInstance& world, const Frame& f, const OneFamilyPlan& plan,
                                      const Tolerance& tol) {
    const ColoredInstance& inst = f.inst;
    if (inst.families() != 2) throw ValidationError("the one-family pipelines need exactly 2 families");
    const DirectionColoring dc = color_circle(inst, 360, tol);
    const Body& k = inst.body();

    auto points_of = [&](std::size_t j) {
        std::vector<Point> q;
        for (const auto& s : inst.family(j)) q.push_back(s.shift + f.center);
        return q;
    };
    auto attempt = [&](std::size_t j, double a, bool use_region, const std::string& how,
                       PiercingCertificate* out) -> bool {
        const auto refs = family_refs(inst, j);
        std::vector<Line> lines;
        for (double t : {a, a + kPi / 2, a + kPi / 4}) {
            auto l = direction_transversal(inst, refs, Direction(t), tol);
            if (!l) return false;
            lines.push_back(*l);
        }
        std::vector<Point> region;
        try {
            const ConvexPolygon r = confinement_region(k, lines);
            for (const Point& v : r.vertices()) region.push_back(v + f.center);
        } catch (const EmptyRegion&) {
            return false;
        }
        const auto frame = place_pentagon(use_region ? region : points_of(j), a, plan.w, tol);
        if (!frame) return false;
        PiercingCertificate cert;
        cert.j = j;
        cert.scope = Scope::family;
        cert.pipeline = plan.pipeline;
        cert.provenance = how;
        cert.bound = plan.bound;
        cert.lines = lines;
        cert.region = region;
        cert.frame = frame;
        try {
            cert.points = plan.cover(*frame);
        } catch (const CoverSearchFailed&) {
            return false;
        }
        bool ok = false;
        *out = finish(cert, f, world, tol, &ok);
        return ok;
    };

    PiercingCertificate out;
    const auto thetas = theta_candidates(dc);
    std::vector<std::pair<std::size_t, double>> tries;
    std::string note;
    if (!thetas.empty()) {
        for (double t1 : thetas)
            for (std::size_t j = 0; j < 2; ++j)
                for (int m = 0; m < 4; ++m) {
                    const double a = t1 + m * kPi / 4;
                    if (dc.has(a, j) && dc.has(a + kPi / 4, j) && dc.has(a + kPi / 2, j)) tries.push_back({j, a});
                }
        // The table's own choice goes first.
        const auto pick = pentagon_directions_at(dc, thetas.front());
        tries.insert(tries.begin(), {pick.j, pick.a});
    } else {
        // No direction carries both colors: the other family pairwise
        // intersects, so every direction is colored by it.
        const auto sw = sweep_special_vch(inst, tol);
        const std::size_t j = 1 - std::get<PairwiseIndex>(sw).j;
        for (int m = 0; m < 16; ++m) tries.push_back({j, m * kPi / 16});
        note = " (no union direction)";
    }
    for (const auto& [j, a] : tries)
        if (attempt(j, a, true, "pentagon:region" + note, &out)) return out;
    for (const auto& [j, a] : tries)
        if (attempt(j, a, false, "pentagon:points" + note, &out)) return out;

    // The translation points alone decide containment; search the rotation.
    for (int m = 0; m < 720; ++m)
        for (std::size_t j = 0; j < 2; ++j) {
            const double a = kPi * m / 720;
            const auto frame = place_pentagon(points_of(j), a, plan.w, tol);
            if (!frame) continue;
            PiercingCertificate cert;
            cert.j = j;
            cert.pipeline = plan.pipeline;
            cert.provenance = "pentagon:search";
            cert.bound = plan.bound;
            cert.frame = frame;
            try {
                cert.points = plan.cover(*frame);
            } catch (const CoverSearchFailed&) {
                continue;
            }
            bool ok = false;
            out = finish(cert, f, world, tol, &ok);
            if (ok) return out;
        }

    const std::size_t first = tries.empty() ? 0 : tries.front().first;
    for (std::size_t j : {first, 1 - first}) {
        const auto b = piercing_bounds(world, family_refs(world, j), std::min<std::size_t>(plan.bound, 6), 128, tol);
        PiercingCertificate cert;
        cert.j = j;
        cert.pipeline = plan.pipeline;
        cert.provenance = "oracle-fallback";
        cert.bound = plan.bound;
        cert.points = b.points;
        if (b.upper <= plan.bound && verify_certificate(cert, world, tol).ok) return cert;
    }
    throw CoverSearchFailed("no pentagon placement or oracle cover with " + std::to_string(plan.bound) + " points");
}

struct UnionPlan {
    std::string pipeline;
    std::size_t bound = 9;
    double side = 0.0;    // square side
    double radius = 0.0;  // disk radius
};

PiercingCertificate square_pipeline(const ColoredInstance& world, const Frame& f, const UnionPlan& plan,
                                    const Tolerance& tol) {
    const ColoredInstance& inst = f.inst;
    const DirectionColoring dc = color_circle(inst, 360, tol);
    std::vector<std::pair<std::size_t, double>> tries;
    std::string note;
    const auto angles = all_colored_angles(dc);
    if (!angles.empty()) {
        const auto pick = pick_orthogonal_directions(dc);
        tries.push_back({pick.j, pick.theta1});
        for (double t : theta_candidates(dc)) {
            const auto c = dc.lookup(t + kPi / 2);
            std::size_t j = 0;
            for (std::size_t i = 0; i < dc.families; ++i)
                if (!std::binary_search(c.begin(), c.end(), i)) j = i;
            tries.push_back({j, t});
        }
    } else {
        const auto sw = sweep_special_vch(inst, tol);
        const std::size_t j = std::get<PairwiseIndex>(sw).j;
        for (int m = 0; m < 8; ++m) tries.push_back({j, m * kPi / 16});
        note = " (no union direction)";
    }
    for (const auto& [j, t] : tries) {
        const auto refs = inst.refs_except(j);
        const auto l1 = direction_transversal(inst, refs, Direction(t), tol);
        const auto l2 = direction_transversal(inst, refs, Direction(t + kPi / 2), tol);
        if (!l1 || !l2) continue;
        std::vector<Point> region;
        try {
            const ConvexPolygon r = confinement_region(inst.body(), {*l1, *l2});
            for (const Point& v : r.vertices()) region.push_back(v + f.center);
        } catch (const EmptyRegion&) {
            continue;
        }
        const Point u1 = unit_vector(t), u2 = unit_vector(t + kPi / 2);
        double s0 = 1e300, s1 = -1e300, r0 = 1e300, r1 = -1e300;
        for (const Point& v : region) {
            s0 = std::min(s0, dot(v, u1)), s1 = std::max(s1, dot(v, u1));
            r0 = std::min(r0, dot(v, u2)), r1 = std::max(r1, dot(v, u2));
        }
        const double side = std::max({plan.side, s1 - s0, r1 - r0});
        const auto gadget = square_disk_cover(side, plan.radius);
        // Center the rectangle inside the square.
        const Point origin = ((s0 + s1 - side) / 2) * u1 + ((r0 + r1 - side) / 2) * u2;
        PiercingCertificate cert;
        cert.j = j;
        cert.scope = Scope::others;
        cert.pipeline = plan.pipeline;
        cert.provenance = "square:region" + note;
        cert.bound = plan.bound;
        cert.lines = {*l1, *l2};
        cert.region = region;
        for (const Disk& d : gadget.disks) cert.points.push_back(origin + d.center.x * u1 + d.center.y * u2);
        bool ok = false;
        cert = finish(cert, f, world, tol, &ok);
        if (ok) return cert;
    }
    throw CoverSearchFailed("no square cover with " + std::to_string(plan.bound) + " points verified");
}

}  // namespace

PiercingCertificate pierce_cw_one_family(const ColoredInstance& inst, const Tolerance& tol) {
    if (!inst.translate_mode()) throw ValidationError("piercing pipelines need translates of one body");
    const auto w = inst.body().constant_width();
    if (!w) throw NotConstantWidth("cw3 needs a body of constant width");
    Frame f;
    f.inst = inst;
    OneFamilyPlan plan{"cw3", 3, *w, {}};
    const Body& k = inst.body();
    plan.cover = [&](const PentagonFrame& fr) {
        // Cover the unit pentagon by translates of -(K seen in the frame).
        const Mat2 m{fr.ex.x / fr.scale, fr.ex.y / fr.scale, fr.ey.x / fr.scale, fr.ey.y / fr.scale};
        const auto c = pentagon_minus_body_cover(k.transformed(m), tol);
        std::vector<Point> pts;
        for (const Placement& p : c.anchors) pts.push_back(fr(p.anchor));
        return pts;
    };
    return pentagon_pipeline(inst, f, plan, tol);
}

PiercingCertificate pierce_near_disk_one_family(const ColoredInstance& inst, const Tolerance& tol) {
    const Frame f = make_frame(inst, NormalizationMode::near_disk, tol);
    const double w = 2 * f.outer;
    const auto gadget = pentagon_three_circle_cover(1 / 2.2356, tol);
    OneFamilyPlan plan{"neardisk3", 3, w, {}};
    plan.cover = [&](const PentagonFrame& fr) {
        std::vector<Point> pts;
        for (const Disk& d : gadget.disks) pts.push_back(fr(d.center));
        return pts;
    };
    return pentagon_pipeline(inst, f, plan, tol);
}

PiercingCertificate pierce_general_8(const ColoredInstance& inst, const Tolerance& tol) {
    const Frame f = make_frame(inst, NormalizationMode::john, tol);
    if (f.outer > 2 * f.inner * (1 + tol.eps_geom))
        throw NotNearDisk("no concentric disks of ratio 2 (found " + std::to_string(f.outer / f.inner) + ")");
    OneFamilyPlan plan{"general8", 8, 2 * f.outer, {}};
    const auto gadget = pentagon_eight_disk_cover();
    plan.cover = [&](const PentagonFrame& fr) {
        std::vector<Point> pts;
        for (const Disk& d : gadget.disks) pts.push_back(fr(d.center));
        return pts;
    };
    return pentagon_pipeline(inst, f, plan, tol);
}

PiercingCertificate pierce_general(const ColoredInstance& inst, const Tolerance& tol) {
    const Frame f = make_frame(inst, NormalizationMode::john, tol);
    return square_pipeline(inst, f, {"general9", 9, 4 * f.inner, f.inner}, tol);
}

PiercingCertificate pierce_constant_width_union(const ColoredInstance& inst, const Tolerance& tol) {
    const Frame f = make_frame(inst, NormalizationMode::constant_width, tol);
    const double w = f.inner + f.outer;
    return square_pipeline(inst, f, {"cw4", 4, w, f.inner}, tol);
}

}  // namespace ct
