#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/body.hpp"

namespace ct {

/// The pentagon ABCDE: the unit square cut by x + y <= sqrt 2.
namespace pentagon {
inline const double kCut = std::sqrt(2.0);
inline const Point A{0, 0}, B{1, 0}, C{1, std::sqrt(2.0) - 1}, D{std::sqrt(2.0) - 1, 1}, E{0, 1};
inline const Point I{std::sqrt(2.0) / 2, std::sqrt(2.0) / 2};
inline const Point G{0.625, 0}, F{0, 0.625}, H{0.625, 0.625};
}  // namespace pentagon

ConvexPolygon canonical_pentagon();
/// AGHF, GBCIH, FHIDE.
std::vector<ConvexPolygon> pentagon_pieces();

struct CoverGadget {
    std::string name;
    ConvexPolygon region;
    std::vector<Disk> disks;
    double analytic_margin = 0.0;  // proven slack when known, else 0
};

struct CoverCheck {
    bool covered = false;        // every sample within eps_cover of some disk
    bool certified = false;      // every sample inside a disk shrunk by pitch * sqrt2 / 2
    double min_slack = 0.0;      // min over samples of max over disks of (radius - distance)
    double pitch = 0.0;
    std::size_t samples = 0;
    std::optional<Point> witness;  // first uncovered sample
};

/// k x k grid of disks over [0, side]^2, k = ceil(side / (radius sqrt 2)).
CoverGadget square_disk_cover(double side, double radius);
/// Circumcircles of MIE, ANM, NBI. Throws RadiusTooSmall.
CoverGadget pentagon_three_circle_cover(double r, const Tolerance& tol = {});
/// 3 x 3 grid of radius-1/4 disks minus the corner cell outside the pentagon.
CoverGadget pentagon_eight_disk_cover();

/// Grid check of the region at the given pitch. Samples are all grid nodes
/// within pitch * sqrt2 / 2 of the region, so `certified` covers the continuum.
CoverCheck verify_cover(const CoverGadget& g, double pitch, const Tolerance& tol = {});

/// Adaptive subdivision: a cell is settled when it lies outside the region or
/// inside one disk enlarged by `slack`. Returns false with a witness when a
/// cell smaller than `min_cell` stays unsettled.
struct AdaptiveCheck {
    bool certified = false;
    std::size_t cells = 0;
    std::optional<Point> witness;
};
AdaptiveCheck certify_cover_adaptive(const CoverGadget& g, double slack = 0.0, double min_cell = 1e-9);

struct RotationCoverReport {
    ConvexPolygon shape;
    double width = 1.0;
    std::size_t angles = 0;
    std::vector<Point> witnesses;  // translation per angle
    double worst_slack = 0.0;
    double worst_angle = 0.0;
};

/// Canonical width-1 Reuleaux triangle: corners at 90, 210, 330 degrees on
/// the circle of radius 1/sqrt 3.
Body canonical_reuleaux();

/// Places every sampled rotation of the shape inside the canonical Reuleaux
/// triangle. Throws RotationUncoverable.
RotationCoverReport reuleaux_rotation_cover(const ConvexPolygon& shape, std::size_t angle_samples, const Tolerance& tol = {});

/// Best translation a with a - v in K for every v, and its slack (min over v
/// of -violation). Positive slack means the points lie in the interior of -K + a.
struct Placement {
    Point anchor;
    double slack = 0.0;
};
Placement fit_in_minus_body(const Body& k, const std::vector<Point>& points);

struct PentagonBodyCover {
    std::vector<Placement> anchors;  // one per piece of pentagon_pieces()
};
/// Requires constant width 1. Throws NotConstantWidth or CoverSearchFailed.
PentagonBodyCover pentagon_minus_body_cover(const Body& k, const Tolerance& tol = {});

}  // namespace ct
