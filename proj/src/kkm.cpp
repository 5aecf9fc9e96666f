#include "ct/kkm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_map>

#include "ct/transversal.hpp"

namespace ct {

namespace {

constexpr double kDegenerate = 1e-12;

// min and max over s of the left-signed distance to the directed line a -> b.
std::pair<double, double> side_range(const TranslateSet& s, Point a, Point b) {
    const Point v = b - a;
    const Point n = Point{-v.y, v.x} / norm(v);
    return {-s.support(-n) - dot(n, a), s.support(n) - dot(n, a)};
}

// +1 strictly left, -1 strictly right, 0 touching or crossing.
int strict_side(const TranslateSet& s, Point a, Point b, double eps) {
    const auto [lo, hi] = side_range(s, a, b);
    if (lo > eps) return 1;
    if (hi < -eps) return -1;
    return 0;
}

// Required signs of (chord a, chord b) for each region.
constexpr int kSign[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

Line map_line_back(const Line& l, Point c, double s) {
    const Point p = l.point(), q = l.point() + l.along();
    return Line::through(c + p / s, c + q / s);
}

}  // namespace

std::optional<Line> ChordConfig::line_a() const {
    if (degenerate_a) return std::nullopt;
    return Line::through(f[0], f[2]);
}

std::optional<Line> ChordConfig::line_b() const {
    if (degenerate_b) return std::nullopt;
    return Line::through(f[1], f[3]);
}

ChordConfig chords(const SimplexPoint& x) {
    ChordConfig c;
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        s += x.x[static_cast<std::size_t>(i)];
        c.f[static_cast<std::size_t>(i)] = i == 3 ? Point{1.0, 0.0} : unit_vector(kTwoPi * s);
    }
    c.degenerate_a = dist(c.f[0], c.f[2]) < kDegenerate;
    c.degenerate_b = dist(c.f[1], c.f[3]) < kDegenerate;
    if (!c.degenerate_a && !c.degenerate_b) c.crossing = line_intersect(*c.line_a(), *c.line_b());
    return c;
}

std::optional<int> region_of(const ChordConfig& c, const SimplexPoint& x, const TranslateSet& s, const Tolerance& tol) {
    const int sa = c.degenerate_a ? 0 : strict_side(s, c.f[0], c.f[2], tol.eps_geom);
    const int sb = c.degenerate_b ? 0 : strict_side(s, c.f[1], c.f[3], tol.eps_geom);
    if ((!c.degenerate_a && sa == 0) || (!c.degenerate_b && sb == 0)) return std::nullopt;
    for (int i = 0; i < 4; ++i) {
        if (x.x[static_cast<std::size_t>(i)] <= 0.0) continue;
        if ((c.degenerate_a || sa == kSign[i][0]) && (c.degenerate_b || sb == kSign[i][1])) return i;
    }
    return std::nullopt;
}

RegionOccupancy classify_regions(const SimplexPoint& x, const ColoredInstance& inst, const Tolerance& tol) {
    RegionOccupancy out;
    const ChordConfig c = chords(x);
    for (const SetRef& r : inst.refs())
        if (auto i = region_of(c, x, inst.set(r), tol)) out.regions[static_cast<std::size_t>(*i)].push_back(r);
    return out;
}

double pierce_gap(const ColoredInstance& inst, std::size_t j, Point p) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const SetRef& r : inst.refs_except(j)) {
        const TranslateSet& s = inst.set(r);
        worst = std::max(worst, s.body->violation(p - s.shift));
    }
    return worst;
}

bool verify_two_lines(const ColoredInstance& inst, const TwoLines& t, const Tolerance& tol) {
    for (const SetRef& r : inst.refs()) {
        const TranslateSet& s = inst.set(r);
        if (!line_meets(t.first, s, tol) && !(t.second && line_meets(*t.second, s, tol))) return false;
    }
    return true;
}

bool verify_pierce_point(const ColoredInstance& inst, const PiercePoint& p, const Tolerance& tol) {
    if (p.j >= inst.families() || !finite(p.p)) return false;
    return pierce_gap(inst, p.j, p.p) <= tol.eps_geom;
}

namespace {

using Vtx = std::array<int, 3>;  // integer prefix sums 0 <= s1 <= s2 <= s3 <= m

struct Label {
    int region = -1;      // 0..3, or -1 when the two chord lines already cross every set
    SetRef occupant;
};

class Search {
public:
    Search(const ColoredInstance& inst, const Tolerance& tol) : inst_(inst), tol_(tol) {}

    std::size_t evaluated = 0;

    SimplexPoint point(const Vtx& v, int m) const {
        const double d = m;
        return {{v[0] / d, (v[1] - v[0]) / d, (v[2] - v[1]) / d, (m - v[2]) / d}};
    }

    std::optional<TwoLines> two_lines_at(const SimplexPoint& x) const {
        const ChordConfig c = chords(x);
        auto a = c.line_a(), b = c.line_b();
        if (!a && !b) return std::nullopt;
        TwoLines t{a ? *a : *b, a && b ? b : std::nullopt};
        if (verify_two_lines(inst_, t, tol_)) return t;
        return std::nullopt;
    }

    Label label(const Vtx& v, int m) {
        const long long key = (static_cast<long long>(v[0]) << 40) | (static_cast<long long>(v[1]) << 20) | v[2];
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        ++evaluated;
        const SimplexPoint x = point(v, m);
        Label out;
        if (auto t = two_lines_at(x)) {
            found = *t;
            found_at = x;
        } else {
            const ChordConfig c = chords(x);
            int best = 4;
            for (const SetRef& r : inst_.refs())
                if (auto i = region_of(c, x, inst_.set(r), tol_); i && *i < best) {
                    best = *i;
                    out.occupant = r;
                }
            if (best == 4) throw ValidationError("no admissible label: a set leaves the unit disk");
            out.region = best;
        }
        cache_.emplace(key, out);
        return out;
    }

    void reset() { cache_.clear(); }

    std::optional<TwoLines> found;
    SimplexPoint found_at;

private:
    const ColoredInstance& inst_;
    Tolerance tol_;
    std::unordered_map<long long, Label> cache_;
};

struct Tet {
    Vtx z;
    std::array<int, 3> perm;

    std::array<Vtx, 4> vertices() const {
        std::array<Vtx, 4> v{z, z, z, z};
        for (int k = 1; k < 4; ++k) {
            v[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k - 1)];
            ++v[static_cast<std::size_t>(k)][static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)])];
        }
        return v;
    }

    // Neighbor across the facet opposite vertex k, and the index of its new vertex.
    std::pair<Tet, int> pivot(int k) const {
        Tet t = *this;
        if (k == 0) {
            ++t.z[static_cast<std::size_t>(perm[0])];
            t.perm = {perm[1], perm[2], perm[0]};
            return {t, 3};
        }
        if (k == 3) {
            --t.z[static_cast<std::size_t>(perm[2])];
            t.perm = {perm[2], perm[0], perm[1]};
            return {t, 0};
        }
        std::swap(t.perm[static_cast<std::size_t>(k - 1)], t.perm[static_cast<std::size_t>(k)]);
        return {t, k};
    }
};

bool inside(const Vtx& v, int m) { return 0 <= v[0] && v[0] <= v[1] && v[1] <= v[2] && v[2] <= m; }

using Door = std::array<Vtx, 3>;

Door sorted_door(std::array<Vtx, 3> d) {
    std::sort(d.begin(), d.end());
    return d;
}

struct Full {
    std::array<Vtx, 4> v;
};

// Door-following from the {0,1,2}-labeled triangles of the face s3 = m.
// Returns nullopt when a two-line certificate turned up along the way.
std::optional<Full> find_full(Search& s, int m) {
    std::vector<std::pair<Door, Tet>> doors;
    for (int z1 = 0; z1 < m; ++z1)
        for (int z2 = z1; z2 < m; ++z2)
            for (int o = 0; o < 2; ++o) {
                const int a = o == 0 ? 0 : 1, b = 1 - a;
                Vtx p0{z1, z2, m}, p1 = p0, p2;
                ++p1[static_cast<std::size_t>(a)];
                p2 = p1;
                ++p2[static_cast<std::size_t>(b)];
                if (!inside(p1, m) || !inside(p2, m)) continue;
                std::array<bool, 4> seen{};
                for (const Vtx& p : {p0, p1, p2}) {
                    const Label l = s.label(p, m);
                    if (s.found) return std::nullopt;
                    seen[static_cast<std::size_t>(l.region)] = true;
                }
                if (seen[0] && seen[1] && seen[2])
                    doors.push_back({sorted_door({p0, p1, p2}), Tet{{z1, z2, m - 1}, {2, a, b}}});
            }

    std::set<Door> used;
    const std::size_t cap = 6u * static_cast<std::size_t>(m) * m * m + 16;
    for (const auto& [door, start] : doors) {
        if (used.count(door)) continue;
        used.insert(door);
        Tet t = start;
        int fresh = 0;
        for (std::size_t step = 0; step < cap; ++step) {
            const auto v = t.vertices();
            std::array<int, 4> lab{};
            for (int k = 0; k < 4; ++k) {
                lab[static_cast<std::size_t>(k)] = s.label(v[static_cast<std::size_t>(k)], m).region;
                if (s.found) return std::nullopt;
            }
            if (lab[static_cast<std::size_t>(fresh)] == 3) return Full{v};
            int twin = -1;
            for (int k = 0; k < 4; ++k)
                if (k != fresh && lab[static_cast<std::size_t>(k)] == lab[static_cast<std::size_t>(fresh)]) twin = k;
            auto [next, nf] = t.pivot(twin);
            bool in = true;
            for (const Vtx& p : next.vertices()) in = in && inside(p, m);
            if (!in) {
                Door d{};
                for (int k = 0, q = 0; k < 4; ++k)
                    if (k != twin) d[static_cast<std::size_t>(q++)] = v[static_cast<std::size_t>(k)];
                used.insert(sorted_door(d));
                break;
            }
            t = next;
            fresh = nf;
        }
    }
    throw ValidationError("Sperner search found no fully labeled simplex");
}

}  // namespace

KkmResult kkm_search(const ColoredInstance& original, int max_depth, const Tolerance& tol) {
    const auto pts = original.sample_points(64);
    const Disk med = min_enclosing_disk(pts);
    const double scale = 1.0 / (std::max(med.radius, 1e-12) * 1.05);
    const ColoredInstance inst = original.mapped(Mat2{scale, 0, 0, scale}, -scale * med.center);

    KkmResult res;
    Search s(inst, tol);
    double best_gap = std::numeric_limits<double>::infinity();
    auto finish_lines = [&](const TwoLines& t, const SimplexPoint& at, int depth) {
        TwoLines back{map_line_back(t.first, med.center, scale), std::nullopt};
        if (t.second) back.second = map_line_back(*t.second, med.center, scale);
        if (!verify_two_lines(original, back, tol)) return false;
        res.certificate = back;
        res.at = at;
        res.depth = depth;
        return true;
    };

    for (int depth = 0; depth <= max_depth; ++depth) {
        const int m = 1 << depth;
        s.reset();
        s.found.reset();
        const auto full = find_full(s, m);
        res.vertices_evaluated = s.evaluated;
        if (!full) {
            if (finish_lines(*s.found, s.found_at, depth)) return res;
            continue;
        }
        SimplexPoint y{{0, 0, 0, 0}};
        std::vector<SetRef> occupants;
        for (const Vtx& v : full->v) {
            const SimplexPoint x = s.point(v, m);
            for (int i = 0; i < 4; ++i) y.x[static_cast<std::size_t>(i)] += x.x[static_cast<std::size_t>(i)] / 4;
            occupants.push_back(s.label(v, m).occupant);
        }
        if (auto t = s.two_lines_at(y); t && finish_lines(*t, y, depth)) return res;

        for (std::size_t a = 0; a < occupants.size(); ++a)
            for (std::size_t b = a + 1; b < occupants.size(); ++b)
                if (occupants[a].family != occupants[b].family && !inst.intersects(occupants[a], occupants[b], tol))
                    throw HypothesisViolation("occupying sets of different families are disjoint", 0.0,
                                              {occupants[a], occupants[b]});

        const ChordConfig c = chords(y);
        if (!c.crossing) continue;
        const Point p = med.center + *c.crossing / scale;
        std::vector<std::size_t> order{occupants[0].family};
        for (std::size_t j = 0; j < original.families(); ++j)
            if (j != order[0]) order.push_back(j);
        for (std::size_t j : order) {
            const double gap = pierce_gap(original, j, p);
            best_gap = std::min(best_gap, gap);
            if (verify_pierce_point(original, {j, p}, tol)) {
                res.certificate = PiercePoint{j, p};
                res.at = y;
                res.depth = depth;
                return res;
            }
        }
    }
    res.certificate = Unresolved{max_depth, best_gap};
    res.depth = max_depth;
    return res;
}

}  // namespace ct
