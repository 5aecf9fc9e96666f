#pragma once

#include <functional>

#include "ct/geom.hpp"

namespace ct {

/// Minimizer of a convex function over the box [lo, hi] by nested
/// golden-section search (the partial minimum over y is convex in x).
Point minimize_convex_2d(const std::function<double(Point)>& f, Point lo, Point hi, double tol = 1e-11);

/// Golden-section minimizer of a convex function of one variable.
double minimize_convex_1d(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-11);

}  // namespace ct
