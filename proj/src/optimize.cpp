#include "ct/optimize.hpp"

#include <cmath>

namespace ct {

double minimize_convex_1d(const std::function<double(double)>& f, double lo, double hi, double tol) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = f(x2);
        }
    }
    return (a + b) / 2.0;
}

Point minimize_convex_2d(const std::function<double(Point)>& f, Point lo, Point hi, double tol) {
    auto inner = [&](double x) {
        const double y = minimize_convex_1d([&](double t) { return f({x, t}); }, lo.y, hi.y, tol);
        return f({x, y});
    };
    const double x = minimize_convex_1d(inner, lo.x, hi.x, tol);
    const double y = minimize_convex_1d([&](double t) { return f({x, t}); }, lo.y, hi.y, tol);
    return {x, y};
}

}  // namespace ct
