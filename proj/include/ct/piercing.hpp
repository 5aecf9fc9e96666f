#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/covering.hpp"
#include "ct/instance.hpp"
#include "ct/kkm.hpp"
#include "ct/transversal.hpp"

namespace ct {

/// The slab {q : lo <= q . u(normal) <= hi}.
struct Strip {
    Direction normal;
    double lo = 0.0;
    double hi = 0.0;
};

/// Translation vectors t such that K + t meets the line.
Strip translation_strip(const Body& k, const Line& line);

/// Intersection of the strips of every line. Throws EmptyRegion.
ConvexPolygon confinement_region(const Body& k, const std::vector<Line>& lines);

/// Placement x -> origin + scale * (x.x * ex + x.y * ey) of the canonical
/// pentagon; (ex, ey) is a rotated orthonormal frame, so the mirror image
/// (the cut on the other corner) is a rotation by pi of the canonical one.
struct PentagonFrame {
    Point origin;
    Point ex{1, 0}, ey{0, 1};
    double scale = 1.0;
    bool mirrored = false;
    Point operator()(Point x) const { return origin + scale * (x.x * ex + x.y * ey); }
    Point inverse(Point p) const { return {dot(p - origin, ex) / scale, dot(p - origin, ey) / scale}; }
};

/// A placement of the pentagon, scaled by w, with its square side along
/// angle `a`, containing every point; tries both orientations.
std::optional<PentagonFrame> place_pentagon(const std::vector<Point>& pts, double a, double w,
                                            const Tolerance& tol = {});

enum class Scope { family, others };

struct PiercingCertificate {
    std::size_t j = 0;
    Scope scope = Scope::family;  // F_j itself, or every family but j
    std::vector<Point> points;
    std::string pipeline;
    std::string provenance;  // how the points were obtained
    std::size_t bound = 0;   // point count the pipeline promises
    std::vector<Line> lines;           // witness transversals used
    std::vector<Point> region;         // confinement region, if any
    std::optional<PentagonFrame> frame;
};

struct Verification {
    bool ok = true;
    std::string failure;  // first unpierced set or broken claim
};

std::vector<SetRef> scope_refs(const ColoredInstance& inst, const PiercingCertificate& cert);
Verification verify_certificate(const PiercingCertificate& cert, const ColoredInstance& inst,
                                const Tolerance& tol = {});
Verification verify_certificate(const KkmCertificate& cert, const ColoredInstance& inst, const Tolerance& tol = {});

/// At most 3 points for one family, K of constant width.
PiercingCertificate pierce_cw_one_family(const ColoredInstance& inst, const Tolerance& tol = {});
/// At most 3 points for one family, K between concentric disks of ratio 1.1178.
PiercingCertificate pierce_near_disk_one_family(const ColoredInstance& inst, const Tolerance& tol = {});
/// At most 8 points for one family, K between disks of ratio 2 after an affine map.
PiercingCertificate pierce_general_8(const ColoredInstance& inst, const Tolerance& tol = {});
/// At most 9 points for every family but j.
PiercingCertificate pierce_general(const ColoredInstance& inst, const Tolerance& tol = {});
/// At most 4 points for every family but j, K of constant width.
PiercingCertificate pierce_constant_width_union(const ColoredInstance& inst, const Tolerance& tol = {});

}  // namespace ct
