#include "ct/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "ct/errors.hpp"
#include "ct/random.hpp"
#include "ct/transversal.hpp"

namespace ct {

namespace {

using Mask = std::uint64_t;

struct Candidate {
    Mask mask = 0;
    Point p;
};

std::vector<Candidate> candidates(const std::vector<ConvexPolygon>& sets, const Tolerance& tol) {
    std::vector<Point> pts;
    for (const auto& s : sets) pts.insert(pts.end(), s.vertices().begin(), s.vertices().end());
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
            const auto& P = sets[a].vertices();
            const auto& Q = sets[b].vertices();
            for (std::size_t i = 0; i < P.size(); ++i)
                for (std::size_t j = 0; j < Q.size(); ++j)
                    for (const Point& x :
                         segment_intersections(P[i], P[(i + 1) % P.size()], Q[j], Q[(j + 1) % Q.size()]))
                        pts.push_back(x);
        }
    std::vector<Candidate> out;
    for (const Point& p : pts) {
        Mask m = 0;
        for (std::size_t s = 0; s < sets.size(); ++s)
            if (sets[s].contains(p, tol)) m |= Mask{1} << s;
        if (m) out.push_back({m, p});
    }
    // Keep one candidate per maximal mask.
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        const int ca = std::popcount(a.mask), cb = std::popcount(b.mask);
        return ca != cb ? ca > cb : a.mask < b.mask;
    });
    std::vector<Candidate> kept;
    for (const Candidate& c : out) {
        bool dominated = false;
        for (const Candidate& k : kept)
            if ((c.mask & k.mask) == c.mask) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(c);
    }
    return kept;
}

class Cover {
public:
    Cover(const std::vector<Candidate>& c, std::size_t n) : c_(c), full_(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1) {}

    bool solve(std::size_t k, std::vector<std::size_t>& pick) {
        failed_.clear();
        pick.clear();
        return search(0, k, pick);
    }

private:
    bool search(Mask covered, std::size_t left, std::vector<std::size_t>& pick) {
        if (covered == full_) return true;
        if (left == 0) return false;
        if (failed_.count({covered, left})) return false;
        const Mask open = full_ & ~covered;
        // Branch on the open set with the fewest candidates.
        std::size_t best_set = 64, best_count = SIZE_MAX;
        for (Mask m = open; m; m &= m - 1) {
            const int s = std::countr_zero(m);
            std::size_t cnt = 0;
            for (const Candidate& c : c_)
                if (c.mask >> s & 1) ++cnt;
            if (cnt < best_count) {
                best_count = cnt;
                best_set = static_cast<std::size_t>(s);
            }
        }
        if (best_count == 0) return false;
        int widest = 0;
        for (const Candidate& c : c_) widest = std::max(widest, std::popcount(c.mask & open));
        if (static_cast<std::size_t>(std::popcount(open)) > left * static_cast<std::size_t>(widest)) {
            remember(covered, left);
            return false;
        }
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!(c_[i].mask >> best_set & 1)) continue;
            pick.push_back(i);
            if (search(covered | c_[i].mask, left - 1, pick)) return true;
            pick.pop_back();
        }
        remember(covered, left);
        return false;
    }

    void remember(Mask covered, std::size_t left) { failed_.insert({covered, left}); }

    struct KeyHash {
        std::size_t operator()(const std::pair<Mask, std::size_t>& k) const {
            return std::hash<Mask>{}(k.first) ^ (k.second * 0x9e3779b97f4a7c15ULL);
        }
    };
    const std::vector<Candidate>& c_;
    Mask full_;
    std::unordered_set<std::pair<Mask, std::size_t>, KeyHash> failed_;
};

std::vector<std::size_t> greedy(const std::vector<Candidate>& c, Mask full) {
    std::vector<std::size_t> pick;
    Mask covered = 0;
    while (covered != full) {
        std::size_t best = 0;
        int gain = -1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int g = std::popcount(c[i].mask & ~covered);
            if (g > gain) {
                gain = g;
                best = i;
            }
        }
        if (gain <= 0) break;
        pick.push_back(best);
        covered |= c[best].mask;
    }
    return pick;
}

}  // namespace

PiercingOracleResult exact_piercing_number(const std::vector<ConvexPolygon>& sets, std::size_t k_max,
                                           const Tolerance& tol) {
    if (sets.size() > 64) throw BudgetExceeded("exact piercing is limited to 64 sets");
    if (k_max > 6) throw BudgetExceeded("exact piercing is limited to k_max <= 6");
    PiercingOracleResult out;
    if (sets.empty()) {
        out.exhausted = true;
        return out;
    }
    const auto cand = candidates(sets, tol);
    Cover cover(cand, sets.size());
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= k_max; ++k)
        if (cover.solve(k, pick)) {
            out.k = k;
            out.exhausted = true;
            for (std::size_t i : pick) out.points.push_back(cand[i].p);
            return out;
        }
    const Mask full = sets.size() == 64 ? ~Mask{0} : (Mask{1} << sets.size()) - 1;
    for (std::size_t i : greedy(cand, full)) out.points.push_back(cand[i].p);
    out.k = out.points.size();
    return out;
}

PiercingBounds piercing_bounds(const ColoredInstance& inst, const std::vector<SetRef>& scope, std::size_t k_max,
                               std::size_t sides, const Tolerance& tol) {
    std::vector<ConvexPolygon> in, out;
    for (const SetRef& r : scope) {
        in.push_back(inst.inscribed(r, sides));
        out.push_back(inst.circumscribed(r, sides));
    }
    PiercingBounds b;
    const auto upper = exact_piercing_number(in, k_max, tol);
    b.upper = upper.k;
    b.points = upper.points;
    const auto lower = exact_piercing_number(out, k_max, tol);
    b.lower = lower.exhausted ? lower.k : k_max + 1;
    b.lower = std::min(b.lower, b.upper);
    return b;
}

std::optional<Point> boxes_common_point(const std::vector<AxisBox>& boxes) {
    for (std::size_t a = 0; a < boxes.size(); ++a)
        for (std::size_t b = a + 1; b < boxes.size(); ++b) {
            const AxisBox& p = boxes[a];
            const AxisBox& q = boxes[b];
            if (std::max(p.x0, q.x0) > std::min(p.x1, q.x1) || std::max(p.y0, q.y0) > std::min(p.y1, q.y1))
                return std::nullopt;
        }
    if (boxes.empty()) return Point{};
    AxisBox c = boxes.front();
    for (const AxisBox& b : boxes) {
        c.x0 = std::max(c.x0, b.x0);
        c.y0 = std::max(c.y0, b.y0);
        c.x1 = std::min(c.x1, b.x1);
        c.y1 = std::min(c.y1, b.y1);
    }
    return Point{(c.x0 + c.x1) / 2, (c.y0 + c.y1) / 2};
}

std::optional<Line> brute_line_transversal(const std::vector<ConvexPolygon>& sets, std::size_t angle_samples,
                                           const Tolerance& tol) {
    if (sets.empty()) return Line(Direction(0), 0);
    std::vector<double> angles;
    std::vector<Point> pts;
    for (const auto& s : sets) pts.insert(pts.end(), s.vertices().begin(), s.vertices().end());
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const Point d = pts[b] - pts[a];
            if (norm(d) < 1e-14) continue;
            angles.push_back(wrap_angle(std::atan2(d.y, d.x) + kPi / 2, kPi));
        }
    for (std::size_t i = 0; i < angle_samples; ++i)
        angles.push_back(kPi * static_cast<double>(i) / static_cast<double>(angle_samples));
    for (double t : angles) {
        const auto l = direction_transversal(sets, Direction(t), tol);
        if (!l) continue;
        bool ok = true;
        for (const auto& s : sets) ok = ok && line_meets(*l, s, tol);
        if (ok) return l;
    }
    return std::nullopt;
}

ConvexPolygon circle_polygon(const Circle& c, std::size_t sides, bool circumscribed) {
    const double r = circumscribed ? c.radius / std::cos(kPi / static_cast<double>(sides)) : c.radius;
    return ConvexPolygon::regular(sides, r).translated(c.center);
}

FuzzReport fuzz_colorful_circles(std::uint64_t seed, std::size_t trials, std::array<std::size_t, 2> sizes,
                                 const Tolerance& tol) {
    FuzzReport rep;
    rep.seed = seed;
    rep.trials = trials;
    bool have_worst = false;
    for (std::size_t t = 0; t < trials; ++t) {
        auto g = rng_stream(seed, t);
        FuzzTrial trial;
        trial.index = t;
        for (std::size_t i = 0; i < sizes[0]; ++i)
            trial.families[0].push_back({{uniform(g, 0, 4), uniform(g, 0, 4)}, uniform(g, 0.3, 1.0)});
        for (std::size_t i = 0; i < sizes[1]; ++i) {
            const Point c{uniform(g, 0, 4), uniform(g, 0, 4)};
            double r = uniform(g, 0.3, 1.0);
            // Grow just enough to reach every circle of the other color.
            for (const Circle& o : trial.families[0]) r = std::max(r, dist(c, o.center) - o.radius);
            trial.families[1].push_back({c, r});
        }
        for (int f = 0; f < 2; ++f) {
            std::vector<ConvexPolygon> in, out;
            for (const Circle& c : trial.families[f]) {
                in.push_back(circle_polygon(c));
                out.push_back(circle_polygon(c, 64, true));
            }
            const auto up = exact_piercing_number(in, 4, tol);
            const auto lo = exact_piercing_number(out, 4, tol);
            trial.k[f] = up.exhausted ? up.k : 5;
            trial.k_lower[f] = lo.exhausted ? std::min(lo.k, trial.k[f]) : 5;
        }
        const std::size_t need = std::min(trial.k[0], trial.k[1]);
        if (need >= 5) {
            if (std::min(trial.k_lower[0], trial.k_lower[1]) >= 5) ++rep.violations;
            else ++rep.inconclusive;
        }
        if (!have_worst || need > std::min(rep.worst.k[0], rep.worst.k[1])) {
            rep.worst = trial;
            have_worst = true;
        }
    }
    rep.status = rep.violations ? "counterexample" : rep.inconclusive ? "inconclusive" : "no counterexample";
    return rep;
}

}  // namespace ct
