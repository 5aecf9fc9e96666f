#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "ct/instance.hpp"

namespace ct {

/// A point of the 3-simplex: nonnegative, summing to 1.
struct SimplexPoint {
    std::array<double, 4> x{0.25, 0.25, 0.25, 0.25};
};

struct ChordConfig {
    std::array<Point, 4> f;
    bool degenerate_a = false;  // chord f1 f3
    bool degenerate_b = false;  // chord f2 f4
    std::optional<Point> crossing;

    std::optional<Line> line_a() const;
    std::optional<Line> line_b() const;
};

ChordConfig chords(const SimplexPoint& x);

/// Sets strictly inside each open region R^i (requires x_i > 0).
struct RegionOccupancy {
    std::array<std::vector<SetRef>, 4> regions;
};

/// Region index 0..3 containing the set, if any (sets must lie in the unit disk).
std::optional<int> region_of(const ChordConfig& c, const SimplexPoint& x, const TranslateSet& s, const Tolerance& tol = {});
RegionOccupancy classify_regions(const SimplexPoint& x, const ColoredInstance& inst, const Tolerance& tol = {});

struct TwoLines {
    Line first;
    std::optional<Line> second;
};
struct PiercePoint {
    std::size_t j = 0;
    Point p;
};
struct Unresolved {
    int depth = 0;
    double gap = 0.0;  // smallest max-violation seen over pierce candidates
};
using KkmCertificate = std::variant<TwoLines, PiercePoint, Unresolved>;

struct KkmResult {
    KkmCertificate certificate;
    int depth = 0;                      // depth at which the search stopped
    std::size_t vertices_evaluated = 0;
    SimplexPoint at;                    // barycenter or vertex producing the certificate
};

/// Searches the simplex at depths 0..max_depth. Works in the coordinates of
/// the instance; sets are scaled into the unit disk internally and results
/// mapped back.
KkmResult kkm_search(const ColoredInstance& inst, int max_depth = 8, const Tolerance& tol = {});

/// Independent checks used before any certificate is returned.
bool verify_two_lines(const ColoredInstance& inst, const TwoLines& t, const Tolerance& tol = {});
bool verify_pierce_point(const ColoredInstance& inst, const PiercePoint& p, const Tolerance& tol = {});

/// Largest violation of p over the sets outside family j.
double pierce_gap(const ColoredInstance& inst, std::size_t j, Point p);

}  // namespace ct
