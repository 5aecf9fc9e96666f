#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ct/instance.hpp"

namespace ct {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

Interval projection_interval(const TranslateSet& s, Direction d);
Interval projection_interval(const ConvexPolygon& p, Direction d);

/// Line with normal d meeting every set, at the middle of the common
/// projection; nullopt when the projections have no common point.
std::optional<Line> direction_transversal(const ColoredInstance& inst, const std::vector<SetRef>& sets, Direction d,
                                          const Tolerance& tol = {});
std::optional<Line> direction_transversal(const std::vector<ConvexPolygon>& sets, Direction d, const Tolerance& tol = {});

/// Line meets set (eps slack).
bool line_meets(const Line& l, const TranslateSet& s, const Tolerance& tol = {});

/// Colors of a direction: families admitting a transversal line perpendicular to it.
std::vector<std::size_t> colors_at(const ColoredInstance& inst, double theta, const Tolerance& tol = {});

/// Angular decomposition of [0, pi). Colors are pi-periodic.
struct DirectionColoring {
    struct Cell {
        double lo = 0.0;
        double hi = 0.0;
        std::vector<std::size_t> colors;              // on the open cell
        std::vector<std::optional<Line>> witnesses;   // per family, at the cell midpoint
    };
    std::size_t families = 0;
    std::vector<double> events;                        // sorted, in [0, pi)
    std::vector<std::vector<std::size_t>> event_colors;
    std::vector<Cell> cells;                           // cells[k] spans events[k] .. events[k+1] (last wraps)

    /// Colors at an angle: the event's set when theta is an event, else its cell's.
    std::vector<std::size_t> lookup(double theta) const;
    bool has(double theta, std::size_t color) const;
};

/// Throws HypothesisViolation when two families are uncolored at one direction.
DirectionColoring color_circle(const ColoredInstance& inst, std::size_t resolution = 360, const Tolerance& tol = {});

struct UnionTransversal {
    Line line;
};
struct PairwiseIndex {
    std::size_t j = 0;
    std::optional<bool> verified;  // set when the union outside j has at most 40 sets
    std::vector<std::string> warnings;
};
using SweepOutcome = std::variant<UnionTransversal, PairwiseIndex>;

SweepOutcome sweep_special_vch(const ColoredInstance& inst, const Tolerance& tol = {}, std::size_t resolution = 360);

/// (j, a, b, c): b = a + pi/2 and c = a + pi/4, all colored j.
struct PentagonDirections {
    std::size_t j = 0;
    double a = 0.0, b = 0.0, c = 0.0;
};
PentagonDirections pick_pentagon_directions(const DirectionColoring& coloring);
/// Same choice anchored at a given all-colored angle.
PentagonDirections pentagon_directions_at(const DirectionColoring& coloring, double theta1);

/// Angles in [0, pi) carrying every color, one per all-colored cell (its
/// lower endpoint) plus all-colored isolated events, in angle order.
std::vector<double> all_colored_angles(const DirectionColoring& coloring);

struct OrthogonalDirections {
    std::size_t j = 0;
    double theta1 = 0.0, theta2 = 0.0;
};
OrthogonalDirections pick_orthogonal_directions(const DirectionColoring& coloring);

}  // namespace ct
