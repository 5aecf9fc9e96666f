#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ct/instance.hpp"
#include "ct/oracle.hpp"

namespace ct {

enum class PlacementLaw { uniform, clustered };

struct InstanceSpec {
    Body body;
    std::vector<std::size_t> sizes;  // one entry per family
    PlacementLaw placement = PlacementLaw::uniform;
    double spread = 2.0;  // half-side of the sampling box, in body circumradii
    std::uint64_t seed = 0;
    std::size_t max_rounds = 100;
    std::size_t max_attempts = 20;
};

/// Translates of spec.body. Cross-color pairs that miss are pulled toward
/// their midpoint until they touch; repeated to a fixed point, resampled on
/// failure. Throws GenerationFailed.
ColoredInstance generate(const InstanceSpec& spec);

/// General-mode instance: family 0 holds small scattered polygons, the other
/// families hulls through every family-0 set, so the hypothesis holds.
ColoredInstance generate_polygons(std::size_t n, std::size_t max_size, std::uint64_t seed);

/// Pairwise-intersecting translates of k (same repair within one family).
std::vector<Point> pairwise_translates(const Body& k, std::size_t m, std::uint64_t seed, double spread = 2.0);
std::vector<AxisBox> pairwise_boxes(std::size_t m, std::uint64_t seed);

/// Random convex polygon with exactly `sides` vertices around the origin.
ConvexPolygon random_convex_polygon(std::mt19937_64& g, std::size_t sides, double radius = 1.0);

/// Named hand-built instances. Throws UnknownFixture.
ColoredInstance canonical(const std::string& name);
const std::vector<std::string>& canonical_names();

}  // namespace ct
