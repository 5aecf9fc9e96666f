#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ct/instance.hpp"

namespace ct {

struct PiercingOracleResult {
    std::size_t k = 0;
    std::vector<Point> points;
    bool exhausted = false;  // k is minimal over the candidate points
};

/// Exact piercing number of convex polygons. Some optimal solution uses
/// vertices of the pieces' intersections, so candidates are polygon vertices
/// and pairwise edge crossings; the cover is found by iterative deepening
/// branch and bound. Above k_max a greedy cover is returned unexhausted.
/// Throws BudgetExceeded beyond 64 sets or k_max > 6.
PiercingOracleResult exact_piercing_number(const std::vector<ConvexPolygon>& sets, std::size_t k_max = 4,
                                           const Tolerance& tol = {});

/// Bounds for sets of an instance: inscribed polygons give a valid upper
/// bound with points, circumscribed ones a lower bound. Exact for polygons.
struct PiercingBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<Point> points;  // verified against the true sets
};
PiercingBounds piercing_bounds(const ColoredInstance& inst, const std::vector<SetRef>& scope, std::size_t k_max = 4,
                               std::size_t polygon_sides = 64, const Tolerance& tol = {});

struct AxisBox {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};
/// A common point when the boxes pairwise intersect, nullopt otherwise.
std::optional<Point> boxes_common_point(const std::vector<AxisBox>& boxes);

/// Any verified line meeting every polygon, trying every vertex-pair
/// direction and a uniform grid of `angle_samples` directions.
std::optional<Line> brute_line_transversal(const std::vector<ConvexPolygon>& sets, std::size_t angle_samples = 720,
                                           const Tolerance& tol = {});

struct Circle {
    Point center;
    double radius = 0.0;
};
struct FuzzTrial {
    std::size_t index = 0;
    std::array<std::vector<Circle>, 2> families;
    std::array<std::size_t, 2> k{};          // upper bounds from inscribed 64-gons
    std::array<std::size_t, 2> k_lower{};    // from circumscribed 64-gons
};
struct FuzzReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t violations = 0;    // both families need at least 5 points
    std::size_t inconclusive = 0;  // upper bound 5 but lower bound below
    FuzzTrial worst;               // largest min(k) over trials, first on ties
    std::string status;
};
FuzzReport fuzz_colorful_circles(std::uint64_t seed, std::size_t trials, std::array<std::size_t, 2> sizes,
                                 const Tolerance& tol = {});

/// Inscribed regular 64-gon of a circle.
ConvexPolygon circle_polygon(const Circle& c, std::size_t sides = 64, bool circumscribed = false);

}  // namespace ct
