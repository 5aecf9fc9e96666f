#pragma once

#include <random>
#include <vector>

#include "ct/instance.hpp"

namespace ct::test {

// Family 0: small scattered polygons. Other families: hulls through one point
// of every family-0 set plus a shared hub, so every cross pair meets.
inline ColoredInstance random_colorful(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1, 1);
    std::uniform_int_distribution<int> count(1, 5);
    std::vector<std::vector<ConvexPolygon>> fams(n);
    const Point hub{0.3 * u(rng), 0.3 * u(rng)};
    const int m0 = count(rng);
    std::vector<Point> anchors;
    for (int k = 0; k < m0; ++k) {
        const Point c{u(rng), u(rng)};
        const double r = 0.05 + 0.3 * (u(rng) + 1) / 2;
        fams[0].push_back(ConvexPolygon::regular(5, r, u(rng)).translated(c));
        anchors.push_back(c);
    }
    for (std::size_t i = 1; i < n; ++i) {
        const int m = count(rng);
        for (int k = 0; k < m; ++k) {
            std::vector<Point> pts = anchors;
            pts.push_back(hub);
            pts.push_back({u(rng), u(rng)});
            auto h = convex_hull(pts);
            if (h.size() < 3) {
                pts.push_back(hub + Point{0.05, 0});
                pts.push_back(hub + Point{0, 0.05});
                h = convex_hull(pts);
            }
            fams[i].push_back(ConvexPolygon(h));
        }
    }
    return ColoredInstance::polygons(std::move(fams));
}

}  // namespace ct::test
