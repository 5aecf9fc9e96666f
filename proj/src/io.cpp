#include "ct/io.hpp"

#include <cmath>
#include <limits>

#include "ct/errors.hpp"

namespace ct {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    return j.get<double>();
}

Point point(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [x, y]");
    return {number(j[0], where + "/0"), number(j[1], where + "/1")};
}

const Json& array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    return j;
}

ConvexPolygon polygon(const Json& j, const std::string& where) {
    std::vector<Point> v;
    std::size_t i = 0;
    for (const Json& p : array(j, where)) v.push_back(point(p, where + "/" + std::to_string(i++)));
    if (v.size() >= 3 && polygon_area(v) < 0)
        throw ValidationError(where + ": vertices must be in counter-clockwise order (CCW)");
    try {
        return ConvexPolygon(std::move(v));
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

Point origin_of(const Json& j, const std::string& where) {
    return j.contains("origin") ? point(j["origin"], where + "/origin") : Point{};
}

Line line_from(const Json& j, const std::string& where) {
    return Line(Direction(number(field(j, "normal", where), where + "/normal")),
                number(field(j, "offset", where), where + "/offset"));
}

std::size_t index(const Json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

}  // namespace

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Json line_json(const Line& l) { return Json{{"normal", l.normal().theta()}, {"offset", l.offset()}}; }

Json body_to_json(const Body& k) {
    Json j;
    j["type"] = k.kind();
    const Point o = k.origin();
    std::visit(overloaded{[&](const DiskShape& d) {
                              j["radius"] = d.radius;
                              j["origin"] = point_json(o);
                          },
                          [&](const PolygonShape& p) {
                              Json v = Json::array();
                              for (const Point& q : p.polygon.vertices()) v.push_back(point_json(q + o));
                              j["vertices"] = v;
                          },
                          [&](const ReuleauxShape& r) {
                              j["arms"] = r.arms;
                              j["width"] = r.width;
                              j["rotation"] = r.rotation;
                              j["origin"] = point_json(o);
                          },
                          [&](const SampledShape& s) {
                              j["angles"] = s.angles;
                              j["values"] = s.values;
                              j["origin"] = point_json(o);
                          }},
               k.shape());
    return j;
}

Body body_from_json(const Json& j, const std::string& where) {
    const Json& t = field(j, "type", where);
    if (!t.is_string()) throw ParseError(where + "/type: expected a string");
    const std::string type = t.get<std::string>();
    try {
        if (type == "disk") return Body::disk(number(field(j, "radius", where), where + "/radius"), origin_of(j, where));
        if (type == "polygon") return Body::polygon(polygon(field(j, "vertices", where), where + "/vertices"));
        if (type == "reuleaux") {
            const Json& arms = field(j, "arms", where);
            if (!arms.is_number_integer()) throw ParseError(where + "/arms: expected an integer");
            const double rot = j.contains("rotation") ? number(j["rotation"], where + "/rotation") : 0.0;
            return Body::reuleaux(arms.get<int>(), number(field(j, "width", where), where + "/width"), rot,
                                  origin_of(j, where));
        }
        if (type == "support") {
            std::vector<double> a, v;
            std::size_t i = 0;
            for (const Json& x : array(field(j, "angles", where), where + "/angles"))
                a.push_back(number(x, where + "/angles/" + std::to_string(i++)));
            i = 0;
            for (const Json& x : array(field(j, "values", where), where + "/values"))
                v.push_back(number(x, where + "/values/" + std::to_string(i++)));
            return Body::sampled(std::move(a), std::move(v), origin_of(j, where));
        }
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;
        throw ValidationError(where + ": " + msg);
    }
    throw ParseError(where + "/type: unknown body type '" + type + "'");
}

ColoredInstance instance_from_json(const Json& doc) {
    const Json& version = field(doc, "version", "document");
    if (version != kInstanceVersion) throw ParseError("version: expected \"" + std::string(kInstanceVersion) + "\"");
    const Json& fams = array(field(doc, "families", "document"), "families");
    const bool translate = doc.contains("body") && !doc["body"].is_null();
    try {
        if (translate) {
            const Body k = body_from_json(doc["body"]);
            std::vector<std::vector<Point>> shifts;
            for (std::size_t i = 0; i < fams.size(); ++i) {
                auto& out = shifts.emplace_back();
                const std::string w = "families/" + std::to_string(i);
                for (std::size_t s = 0; s < array(fams[i], w).size(); ++s)
                    out.push_back(point(fams[i][s], w + "/" + std::to_string(s)));
            }
            return ColoredInstance::translates(k, std::move(shifts));
        }
        std::vector<std::vector<ConvexPolygon>> polys;
        for (std::size_t i = 0; i < fams.size(); ++i) {
            auto& out = polys.emplace_back();
            const std::string w = "families/" + std::to_string(i);
            for (std::size_t s = 0; s < array(fams[i], w).size(); ++s)
                out.push_back(polygon(fams[i][s], w + "/" + std::to_string(s)));
        }
        return ColoredInstance::polygons(std::move(polys));
    } catch (const EmptyInput& e) {
        throw ValidationError(std::string("families: ") + e.what());
    }
}

ColoredInstance parse_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte) + ": " + e.what());
    }
    return instance_from_json(doc);
}

Json instance_to_json(const ColoredInstance& inst) {
    Json doc;
    doc["version"] = kInstanceVersion;
    if (inst.translate_mode()) doc["body"] = body_to_json(inst.body());
    Json fams = Json::array();
    for (std::size_t i = 0; i < inst.families(); ++i) {
        Json f = Json::array();
        for (std::size_t s = 0; s < inst.size(i); ++s) {
            if (inst.translate_mode()) {
                f.push_back(point_json(inst.set({i, s}).shift));
            } else {
                Json v = Json::array();
                for (const Point& p : inst.vertices({i, s})) v.push_back(point_json(p));
                f.push_back(v);
            }
        }
        fams.push_back(f);
    }
    doc["families"] = fams;
    return doc;
}

Json certificate_json(const PiercingCertificate& c) {
    Json j;
    j["version"] = kCertificateVersion;
    j["kind"] = "piercing";
    j["pipeline"] = c.pipeline;
    j["provenance"] = c.provenance;
    j["j"] = c.j;
    j["scope"] = c.scope == Scope::family ? "family" : "others";
    j["bound"] = c.bound;
    Json pts = Json::array();
    for (const Point& p : c.points) pts.push_back(point_json(p));
    j["points"] = pts;
    Json lines = Json::array();
    for (const Line& l : c.lines) lines.push_back(line_json(l));
    j["lines"] = lines;
    return j;
}

Json certificate_json(const KkmCertificate& c) {
    Json j;
    j["version"] = kCertificateVersion;
    std::visit(overloaded{[&](const TwoLines& t) {
                              j["kind"] = "two-lines";
                              Json lines = Json::array({line_json(t.first)});
                              if (t.second) lines.push_back(line_json(*t.second));
                              j["lines"] = lines;
                          },
                          [&](const PiercePoint& p) {
                              j["kind"] = "pierce-point";
                              j["j"] = p.j;
                              j["point"] = point_json(p.p);
                          },
                          [&](const Unresolved& u) {
                              j["kind"] = "unresolved";
                              j["depth"] = u.depth;
                              j["gap"] = std::isfinite(u.gap) ? Json(u.gap) : Json(nullptr);
                          }},
               c);
    return j;
}

Json certificate_json(const SweepOutcome& c) {
    Json j;
    j["version"] = kCertificateVersion;
    std::visit(overloaded{[&](const UnionTransversal& u) {
                              j["kind"] = "union-transversal";
                              j["line"] = line_json(u.line);
                          },
                          [&](const PairwiseIndex& p) {
                              j["kind"] = "pairwise-index";
                              j["j"] = p.j;
                              j["verified"] = p.verified ? Json(*p.verified) : Json(nullptr);
                              j["warnings"] = p.warnings;
                          }},
               c);
    return j;
}

AnyCertificate parse_certificate(const Json& doc) {
    if (field(doc, "version", "certificate") != kCertificateVersion)
        throw ParseError("certificate/version: expected \"" + std::string(kCertificateVersion) + "\"");
    const Json& kind = field(doc, "kind", "certificate");
    if (!kind.is_string()) throw ParseError("certificate/kind: expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "piercing") {
        PiercingCertificate c;
        c.j = index(field(doc, "j", "certificate"), "certificate/j");
        const Json& scope = field(doc, "scope", "certificate");
        if (scope != "family" && scope != "others") throw ParseError("certificate/scope: expected family or others");
        c.scope = scope == "family" ? Scope::family : Scope::others;
        c.bound = doc.contains("bound") ? index(doc["bound"], "certificate/bound") : 0;
        if (doc.contains("pipeline") && doc["pipeline"].is_string()) c.pipeline = doc["pipeline"].get<std::string>();
        if (doc.contains("provenance") && doc["provenance"].is_string()) c.provenance = doc["provenance"].get<std::string>();
        std::size_t i = 0;
        for (const Json& p : array(field(doc, "points", "certificate"), "certificate/points"))
            c.points.push_back(point(p, "certificate/points/" + std::to_string(i++)));
        if (doc.contains("lines")) {
            i = 0;
            for (const Json& l : array(doc["lines"], "certificate/lines"))
                c.lines.push_back(line_from(l, "certificate/lines/" + std::to_string(i++)));
        }
        return c;
    }
    if (k == "two-lines") {
        const Json& lines = array(field(doc, "lines", "certificate"), "certificate/lines");
        if (lines.empty() || lines.size() > 2) throw ParseError("certificate/lines: expected one or two lines");
        TwoLines t{line_from(lines[0], "certificate/lines/0"), std::nullopt};
        if (lines.size() == 2) t.second = line_from(lines[1], "certificate/lines/1");
        return KkmCertificate{t};
    }
    if (k == "pierce-point")
        return KkmCertificate{PiercePoint{index(field(doc, "j", "certificate"), "certificate/j"),
                                          point(field(doc, "point", "certificate"), "certificate/point")}};
    if (k == "unresolved") {
        const Json& gap = field(doc, "gap", "certificate");
        const Json& depth = field(doc, "depth", "certificate");
        if (!depth.is_number_integer()) throw ParseError("certificate/depth: expected an integer");
        return KkmCertificate{Unresolved{depth.get<int>(), gap.is_null() ? std::numeric_limits<double>::infinity()
                                                                          : number(gap, "certificate/gap")}};
    }
    if (k == "union-transversal")
        return SweepOutcome{UnionTransversal{line_from(field(doc, "line", "certificate"), "certificate/line")}};
    if (k == "pairwise-index") {
        PairwiseIndex p;
        p.j = index(field(doc, "j", "certificate"), "certificate/j");
        return SweepOutcome{p};
    }
    throw ParseError("certificate/kind: unknown kind '" + k + "'");
}

Verification verify_any(const AnyCertificate& c, const ColoredInstance& inst, const Tolerance& tol) {
    if (const auto* p = std::get_if<PiercingCertificate>(&c)) return verify_certificate(*p, inst, tol);
    if (const auto* k = std::get_if<KkmCertificate>(&c)) return verify_certificate(*k, inst, tol);
    const auto& s = std::get<SweepOutcome>(c);
    if (const auto* u = std::get_if<UnionTransversal>(&s)) {
        for (const SetRef& r : inst.refs())
            if (!line_meets(u->line, inst.set(r), tol))
                return {false, "set (" + std::to_string(r.family) + ", " + std::to_string(r.index) + ") misses the line"};
        return {};
    }
    const auto& p = std::get<PairwiseIndex>(s);
    if (p.j >= inst.families()) return {false, "family index " + std::to_string(p.j) + " out of range"};
    const auto rest = inst.refs_except(p.j);
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b)
            if (!inst.intersects(rest[a], rest[b], tol))
                return {false, "sets (" + std::to_string(rest[a].family) + ", " + std::to_string(rest[a].index) +
                                   ") and (" + std::to_string(rest[b].family) + ", " + std::to_string(rest[b].index) +
                                   ") are disjoint"};
    return {};
}

bool is_certified(const AnyCertificate& c) {
    if (const auto* k = std::get_if<KkmCertificate>(&c)) return !std::holds_alternative<Unresolved>(*k);
    return true;
}

Json fuzz_report_json(const FuzzReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["violations"] = r.violations;
    j["inconclusive"] = r.inconclusive;
    j["status"] = r.status;
    Json w;
    w["trial"] = r.worst.index;
    w["piercing"] = r.worst.k;
    w["piercing_lower"] = r.worst.k_lower;
    Json fams = Json::array();
    for (const auto& f : r.worst.families) {
        Json fa = Json::array();
        for (const Circle& c : f) fa.push_back(Json{{"center", point_json(c.center)}, {"radius", c.radius}});
        fams.push_back(fa);
    }
    w["families"] = fams;
    j["worst"] = w;
    return j;
}

}  // namespace ct
