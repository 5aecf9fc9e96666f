#pragma once

#include <optional>
#include <string>

#include "ct/io.hpp"

namespace ct {

struct SvgOptions {
    double width_px = 800;
    std::size_t curve_sides = 128;
};

/// Layers in fixed order: sets, confinement region, pentagon, lines, points.
/// Identical inputs give byte-identical output.
std::string render_svg(const ColoredInstance& inst, const std::optional<AnyCertificate>& cert = std::nullopt,
                       const SvgOptions& opt = {});

}  // namespace ct
