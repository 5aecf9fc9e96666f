#include "ct/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ct {

namespace {

void require_shape(std::size_t families, const auto& sizes) {
    if (families < 2) throw ValidationError("an instance needs at least 2 families");
    for (std::size_t i = 0; i < families; ++i)
        if (sizes(i) == 0) throw EmptyInput("family " + std::to_string(i) + " is empty");
}

const ConvexPolygon* as_polygon(const Body& b) {
    if (const auto* p = std::get_if<PolygonShape>(&b.shape())) return &p->polygon;
    return nullptr;
}

}  // namespace

ColoredInstance ColoredInstance::translates(Body k, std::vector<std::vector<Point>> shifts) {
    require_shape(shifts.size(), [&](std::size_t i) { return shifts[i].size(); });
    ColoredInstance inst;
    inst.translate_ = true;
    inst.body_ = std::make_shared<const Body>(std::move(k));
    inst.diff_ = std::make_shared<const Body>(difference_body(*inst.body_));
    for (const auto& fam : shifts) {
        auto& out = inst.sets_.emplace_back();
        for (const Point& t : fam) {
            if (!finite(t)) throw ValidationError("translation vector is not finite");
            out.push_back({inst.body_, t});
        }
    }
    return inst;
}

ColoredInstance ColoredInstance::polygons(std::vector<std::vector<ConvexPolygon>> families) {
    require_shape(families.size(), [&](std::size_t i) { return families[i].size(); });
    ColoredInstance inst;
    for (auto& fam : families) {
        auto& out = inst.sets_.emplace_back();
        for (auto& p : fam) out.push_back({std::make_shared<const Body>(Body::polygon(std::move(p))), Point{}});
    }
    return inst;
}

std::size_t ColoredInstance::total() const {
    std::size_t n = 0;
    for (const auto& f : sets_) n += f.size();
    return n;
}

std::vector<SetRef> ColoredInstance::refs() const { return refs_except(families()); }

std::vector<SetRef> ColoredInstance::refs_except(std::size_t j) const {
    std::vector<SetRef> out;
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (i != j)
            for (std::size_t k = 0; k < sets_[i].size(); ++k) out.push_back({i, k});
    return out;
}

bool ColoredInstance::intersects(SetRef a, SetRef b, const Tolerance& tol) const {
    if (translate_) return translates_intersect_diff(*diff_, set(a).shift, set(b).shift, tol);
    return sets_intersect(set(a), set(b), tol);
}

std::vector<Point> ColoredInstance::vertices(SetRef r) const {
    const TranslateSet& s = set(r);
    std::vector<Point> out;
    if (const ConvexPolygon* p = as_polygon(*s.body))
        for (const Point& v : p->vertices()) out.push_back(v + s.shift);
    return out;
}

ConvexPolygon ColoredInstance::inscribed(SetRef r, std::size_t n) const {
    const TranslateSet& s = set(r);
    if (const ConvexPolygon* p = as_polygon(*s.body)) return p->translated(s.shift);
    return s.body->inscribed_polygon(n).translated(s.shift);
}

ConvexPolygon ColoredInstance::circumscribed(SetRef r, std::size_t n) const {
    const TranslateSet& s = set(r);
    if (const ConvexPolygon* p = as_polygon(*s.body)) return p->translated(s.shift);
    return s.body->circumscribed_polygon(n).translated(s.shift);
}

std::vector<Point> ColoredInstance::sample_points(std::size_t n) const {
    std::vector<Point> out;
    for (const SetRef& r : refs()) {
        const TranslateSet& s = set(r);
        if (const ConvexPolygon* p = as_polygon(*s.body)) {
            for (const Point& v : p->vertices()) out.push_back(v + s.shift);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(s.body->support_point(unit_vector(kTwoPi * static_cast<double>(i) / static_cast<double>(n))) + s.shift);
        }
    }
    return out;
}

ColoredInstance ColoredInstance::mapped(const Mat2& m, Point offset) const {
    if (translate_) {
        std::vector<std::vector<Point>> shifts;
        for (const auto& fam : sets_) {
            auto& out = shifts.emplace_back();
            for (const TranslateSet& s : fam) out.push_back(m(s.shift) + offset);
        }
        return translates(body_->transformed(m), std::move(shifts));
    }
    std::vector<std::vector<ConvexPolygon>> fams;
    for (const auto& fam : sets_) {
        auto& out = fams.emplace_back();
        for (const TranslateSet& s : fam) {
            std::vector<Point> v;
            for (const Point& q : as_polygon(*s.body)->vertices()) v.push_back(m(q + s.shift) + offset);
            if (m.det() < 0) std::reverse(v.begin(), v.end());
            out.emplace_back(std::move(v));
        }
    }
    return polygons(std::move(fams));
}

bool sets_intersect(const TranslateSet& a, const TranslateSet& b, const Tolerance& tol) {
    if (a.body == b.body) return translates_intersect(*a.body, a.shift, b.shift, tol);
    const ConvexPolygon* pa = as_polygon(*a.body);
    const ConvexPolygon* pb = as_polygon(*b.body);
    if (pa && pb) return polygons_intersect(pa->translated(a.shift), pb->translated(b.shift), tol);
    // Disjoint iff some direction u has h_A(u) + h_B(-u) < 0.
    auto gap = [&](double t) {
        const Point u = unit_vector(t);
        return a.support(u) + b.support(-u);
    };
    constexpr int kGrid = 2048;
    double best = std::numeric_limits<double>::infinity();
    int bi = 0;
    for (int i = 0; i < kGrid; ++i) {
        const double g = gap(kTwoPi * i / kGrid);
        if (g < best) { best = g; bi = i; }
    }
    double lo = kTwoPi * (bi - 1) / kGrid, hi = kTwoPi * (bi + 1) / kGrid;
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
        const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (gap(m1) < gap(m2)) hi = m2;
        else lo = m1;
    }
    best = std::min(best, gap((lo + hi) / 2));
    return best >= -tol.eps_geom;
}

HypothesisReport check_hypothesis(const ColoredInstance& inst, const Tolerance& tol, std::size_t max_report) {
    HypothesisReport rep;
    const std::size_t n = inst.families();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t a = 0; a < inst.size(i); ++a)
                for (std::size_t b = 0; b < inst.size(j); ++b) {
                    ++rep.pairs_checked;
                    if (!inst.intersects({i, a}, {j, b}, tol)) {
                        rep.ok = false;
                        if (rep.violations.size() < max_report) rep.violations.push_back({{i, a}, {j, b}});
                    }
                }
    return rep;
}

}  // namespace ct
