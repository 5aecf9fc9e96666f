#pragma once

#include <memory>
#include <vector>

#include "ct/body.hpp"
#include "ct/errors.hpp"

namespace ct {

/// n >= 2 finite families of convex sets. Either every set is a translate of
/// one shared body (translate mode), or each set is its own polygon.
class ColoredInstance {
public:
    ColoredInstance() = default;
    static ColoredInstance translates(Body k, std::vector<std::vector<Point>> shifts);
    static ColoredInstance polygons(std::vector<std::vector<ConvexPolygon>> families);

    bool translate_mode() const { return translate_; }
    const Body& body() const { return *body_; }
    const Body& difference() const { return *diff_; }

    std::size_t families() const { return sets_.size(); }
    std::size_t size(std::size_t family) const { return sets_[family].size(); }
    std::size_t total() const;
    const TranslateSet& set(SetRef r) const { return sets_[r.family][r.index]; }
    const std::vector<TranslateSet>& family(std::size_t i) const { return sets_[i]; }

    std::vector<SetRef> refs() const;
    /// Every set outside family j (all sets when j >= families()).
    std::vector<SetRef> refs_except(std::size_t j) const;

    double support(SetRef r, Point u) const { return set(r).support(u); }
    bool contains(SetRef r, Point p, const Tolerance& tol = {}) const { return set(r).contains(p, tol); }
    bool intersects(SetRef a, SetRef b, const Tolerance& tol = {}) const;

    /// Polygon vertices of a set, empty for curved sets.
    std::vector<Point> vertices(SetRef r) const;
    ConvexPolygon inscribed(SetRef r, std::size_t n = 256) const;
    ConvexPolygon circumscribed(SetRef r, std::size_t n = 256) const;
    /// Vertices of every polygonal set plus `n` support points of curved ones.
    std::vector<Point> sample_points(std::size_t n = 64) const;

    /// Image under x -> m x + offset (similarities only for disk/Reuleaux bodies).
    ColoredInstance mapped(const Mat2& m, Point offset) const;

private:
    bool translate_ = false;
    std::shared_ptr<const Body> body_;
    std::shared_ptr<const Body> diff_;
    std::vector<std::vector<TranslateSet>> sets_;
};

/// Intersection test for two sets with possibly different bodies.
bool sets_intersect(const TranslateSet& a, const TranslateSet& b, const Tolerance& tol = {});

struct HypothesisReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<SetRef, SetRef>> violations;
};

/// Checks A meets B for every A, B from different families.
HypothesisReport check_hypothesis(const ColoredInstance& inst, const Tolerance& tol = {}, std::size_t max_report = 16);

}  // namespace ct
