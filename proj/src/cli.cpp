#include "ct/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "ct/covering.hpp"
#include "ct/errors.hpp"
#include "ct/instances.hpp"
#include "ct/io.hpp"
#include "ct/kkm.hpp"
#include "ct/oracle.hpp"
#include "ct/piercing.hpp"
#include "ct/random.hpp"
#include "ct/svg.hpp"

namespace ct {

namespace {

struct Options {
    std::uint64_t seed = 1;
    std::string instance, fixture, certificate, mode = "cw3", svg, body = "reuleaux3", sizes = "4,4";
    int max_depth = 8;
    std::size_t resolution = 360, trials = 10, k_max = 4, angles = 3600;
    double pitch = 0.002, spread = 2.0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IOError", "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ColoredInstance load(const Options& o) {
    if (!o.fixture.empty()) return canonical(o.fixture);
    if (o.instance.empty()) throw ValidationError("give --instance PATH or --fixture NAME");
    return parse_instance(read_file(o.instance));
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(part, &used);
            if (used != part.size() || v < 0) throw std::invalid_argument(part);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw ValidationError("--sizes expects comma-separated counts, got '" + s + "'");
        }
    }
    return out;
}

Body body_named(const std::string& name, std::uint64_t seed) {
    if (name == "disk") return Body::disk(0.5);
    if (name == "reuleaux3") return Body::reuleaux(3, 1.0);
    if (name == "reuleaux5") return Body::reuleaux(5, 1.0);
    if (name == "square") return Body::polygon(ConvexPolygon::box(-0.5, -0.5, 0.5, 0.5));
    if (name == "12gon") return Body::polygon(ConvexPolygon::regular(12, 0.5));
    if (name == "hexagon") {
        auto g = rng_stream(seed, 0xb0d1);
        return Body::polygon(random_convex_polygon(g, 6, 0.5));
    }
    throw ValidationError("unknown body '" + name + "'");
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

Json base(const std::string& command) { return Json{{"command", command}}; }

std::string fixed(double v, int digits = 6) {
    std::ostringstream s;
    s << std::setprecision(digits) << v;
    return s.str();
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    const auto inst = load(o);
    Json doc = base("check");
    if (o.certificate.empty()) {
        const auto rep = check_hypothesis(inst);
        doc["hypothesis"] = rep.ok;
        doc["pairs_checked"] = rep.pairs_checked;
        Json v = Json::array();
        for (const auto& [a, b] : rep.violations)
            v.push_back(Json::array({Json::array({a.family, a.index}), Json::array({b.family, b.index})}));
        doc["violations"] = v;
        emit(out, doc);
        err << "colorful hypothesis " << (rep.ok ? "holds" : "FAILS") << " (" << rep.pairs_checked
            << " cross pairs checked)\n";
        return rep.ok ? 0 : 1;
    }
    Json cdoc;
    try {
        cdoc = Json::parse(read_file(o.certificate));
    } catch (const Json::parse_error& e) {
        throw ParseError("certificate byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (cdoc.contains("certificate")) cdoc = cdoc["certificate"];
    const auto cert = parse_certificate(cdoc);
    const auto v = verify_any(cert, inst);
    const bool claims = is_certified(cert);
    doc["certificate_kind"] = cdoc["kind"];
    doc["verified"] = v.ok;
    doc["claims_result"] = claims;
    if (!v.ok) doc["failure"] = v.failure;
    emit(out, doc);
    if (!v.ok) {
        err << "certificate REJECTED: " << v.failure << "\n";
        return 1;
    }
    err << (claims ? "certificate verified\n" : "certificate is an honest unresolved result\n");
    return claims ? 0 : 2;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    const auto inst = load(o);
    const auto s = sweep_special_vch(inst, {}, o.resolution);
    const auto v = verify_any(s, inst);
    Json doc = base("sweep");
    doc["certificate"] = certificate_json(s);
    doc["verified"] = v.ok;
    emit(out, doc);
    if (const auto* u = std::get_if<UnionTransversal>(&s))
        err << "line transversal to every set: normal " << fixed(u->line.normal().theta()) << " rad, offset "
            << fixed(u->line.offset()) << "\n";
    else
        err << "no union transversal; every family but " << std::get<PairwiseIndex>(s).j
            << " is pairwise intersecting" << (v.ok ? "" : " (NOT verified)") << "\n";
    return v.ok ? 0 : 1;
}

int cmd_kkm(const Options& o, std::ostream& out, std::ostream& err) {
    const auto inst = load(o);
    const auto r = kkm_search(inst, o.max_depth);
    const auto v = verify_certificate(r.certificate, inst);
    Json doc = base("kkm");
    doc["certificate"] = certificate_json(r.certificate);
    doc["depth"] = r.depth;
    doc["vertices_evaluated"] = r.vertices_evaluated;
    doc["verified"] = v.ok;
    emit(out, doc);
    if (!v.ok) {
        err << "kkm produced an unverifiable certificate: " << v.failure << "\n";
        return 1;
    }
    if (std::holds_alternative<Unresolved>(r.certificate)) {
        err << "unresolved at depth " << r.depth << "\n";
        return 2;
    }
    err << (std::holds_alternative<TwoLines>(r.certificate) ? "two lines cross every set" : "one point pierces every family but one")
        << " (depth " << r.depth << ", " << r.vertices_evaluated << " labels)\n";
    return 0;
}

int cmd_pierce(const Options& o, std::ostream& out, std::ostream& err) {
    const auto inst = load(o);
    PiercingCertificate c;
    if (o.mode == "cw3") c = pierce_cw_one_family(inst);
    else if (o.mode == "neardisk3") c = pierce_near_disk_one_family(inst);
    else if (o.mode == "general9") c = pierce_general(inst);
    else if (o.mode == "cw4") c = pierce_constant_width_union(inst);
    else if (o.mode == "general8") c = pierce_general_8(inst);
    else throw ValidationError("unknown mode '" + o.mode + "'");
    const auto v = verify_certificate(c, inst);
    Json doc = base("pierce");
    doc["mode"] = o.mode;
    doc["certificate"] = certificate_json(c);
    doc["verified"] = v.ok;
    emit(out, doc);
    err << o.mode << ": " << c.points.size() << " points pierce "
        << (c.scope == Scope::family ? "family " : "every family but ") << c.j << " via " << c.provenance
        << (v.ok ? "" : " (NOT verified: " + v.failure + ")") << "\n";
    return v.ok ? 0 : 1;
}

int cmd_gadgets(const Options& o, std::ostream& out, std::ostream& err) {
    if (!(o.pitch > 0)) throw ValidationError("--pitch must be positive");
    const auto start = std::chrono::steady_clock::now();
    Json rows = Json::array();
    bool all = true;
    auto disk_row = [&](const CoverGadget& g, bool adaptive) {
        const auto c = verify_cover(g, o.pitch);
        double rmax = 0;
        for (const Disk& d : g.disks) rmax = std::max(rmax, d.radius);
        Json r{{"gadget", g.name},
               {"disks", g.disks.size()},
               {"max_radius", rmax},
               {"pitch", o.pitch},
               {"samples", c.samples},
               {"min_slack", c.min_slack},
               {"covered", c.covered},
               {"grid_certified", c.certified}};
        bool ok = c.covered && c.certified;
        if (adaptive) {
            const auto a = certify_cover_adaptive(g, Tolerance{}.eps_cover);
            r["adaptive_certified"] = a.certified;
            r["adaptive_cells"] = a.cells;
            ok = c.covered && a.certified;
        }
        r["verified"] = ok;
        all = all && ok;
        rows.push_back(r);
        err << std::left << std::setw(44) << g.name << "max radius " << std::setw(10) << fixed(rmax) << " min slack " << std::setw(13) << fixed(c.min_slack)
            << (ok ? "verified" : "FAILED") << "\n";
    };
    disk_row(square_disk_cover(4.0, 1.0), false);
    disk_row(square_disk_cover(1.0 + std::sqrt(3.0), 1.0), false);
    const auto three = pentagon_three_circle_cover(1 / 2.2356);
    disk_row(three, true);
    bool small = true;
    for (const Disk& d : three.disks) small = small && d.radius <= 0.4474;
    all = all && small;

    const char* names[] = {"square AGHF", "pentagon GBCIH", "pentagon FHIDE"};
    const auto pieces = pentagon_pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Json r{{"gadget", std::string("Reuleaux rotations of ") + names[i]}, {"angles", o.angles}};
        try {
            const auto rep = reuleaux_rotation_cover(pieces[i], o.angles);
            const bool ok = rep.worst_slack > 0;
            r["worst_slack"] = rep.worst_slack;
            r["worst_angle"] = rep.worst_angle;
            r["verified"] = ok;
            all = all && ok;
            err << std::left << std::setw(44) << r["gadget"].get<std::string>() << o.angles << " angles, worst slack "
                << fixed(rep.worst_slack) << " at " << fixed(rep.worst_angle) << " rad  " << (ok ? "verified" : "FAILED")
                << "\n";
        } catch (const RotationUncoverable& e) {
            r["verified"] = false;
            r["error"] = e.what();
            all = false;
            err << r["gadget"].get<std::string>() << ": FAILED " << e.what() << "\n";
        }
        rows.push_back(r);
    }
    disk_row(pentagon_eight_disk_cover(), false);

    Json doc = base("gadgets");
    doc["gadgets"] = rows;
    doc["all_verified"] = all;
    emit(out, doc);
    err << "total " << fixed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 3)
        << " s\n";
    return all ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
    const auto inst = load(o);
    Json fams = Json::array();
    for (std::size_t j = 0; j < inst.families(); ++j) {
        std::vector<SetRef> refs;
        for (std::size_t k = 0; k < inst.size(j); ++k) refs.push_back({j, k});
        const auto b = piercing_bounds(inst, refs, o.k_max);
        Json pts = Json::array();
        for (const Point& p : b.points) pts.push_back(point_json(p));
        const bool capped = b.lower > o.k_max;
        fams.push_back(Json{{"family", j}, {"lower", b.lower}, {"upper", b.upper}, {"exact", b.lower == b.upper && !capped}, {"points", pts}});
        err << "family " << j << ": piercing number " << (b.lower == b.upper ? std::to_string(b.upper)
                                                            : "in [" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]")
            << "\n";
    }
    Json doc = base("oracle");
    doc["k_max"] = o.k_max;
    doc["families"] = fams;
    emit(out, doc);
    return 0;
}

int cmd_fuzz(const Options& o, std::ostream& out, std::ostream& err) {
    const auto sizes = parse_sizes(o.sizes);
    if (sizes.size() != 2) throw ValidationError("--sizes needs two counts for fuzz");
    const auto r = fuzz_colorful_circles(o.seed, o.trials, {sizes[0], sizes[1]});
    Json doc = base("fuzz");
    doc["report"] = fuzz_report_json(r);
    emit(out, doc);
    err << r.trials << " trials, seed " << r.seed << ": " << r.status << "; worst trial " << r.worst.index
        << " needs (" << r.worst.k[0] << ", " << r.worst.k[1] << ") points\n";
    return r.violations ? 2 : 0;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.body == "polygons") {
        const auto sizes = parse_sizes(o.sizes);
        if (sizes.size() < 2) throw ValidationError("--sizes needs at least two families");
        const auto inst = generate_polygons(sizes.size(), *std::max_element(sizes.begin(), sizes.end()), o.seed);
        emit(out, instance_to_json(inst));
        err << "generated " << inst.total() << " convex polygons in " << inst.families() << " families\n";
        return 0;
    }
    InstanceSpec spec{body_named(o.body, o.seed), parse_sizes(o.sizes)};
    spec.seed = o.seed;
    spec.spread = o.spread;
    const auto inst = generate(spec);
    emit(out, instance_to_json(inst));
    err << "generated " << inst.total() << " translates of " << o.body << " in " << inst.families() << " families\n";
    return 0;
}

int cmd_render(const Options& o, std::ostream& out, std::ostream& err) {
    const auto inst = load(o);
    std::optional<AnyCertificate> cert;
    if (!o.certificate.empty()) {
        Json cdoc = Json::parse(read_file(o.certificate));
        if (cdoc.contains("certificate")) cdoc = cdoc["certificate"];
        cert = parse_certificate(cdoc);
    }
    const std::string svg = render_svg(inst, cert);
    std::ofstream f(o.svg, std::ios::binary);
    if (!f) throw Error("IOError", "cannot write " + o.svg);
    f << svg;
    Json doc = base("render");
    doc["svg"] = o.svg;
    doc["bytes"] = svg.size();
    emit(out, doc);
    err << "wrote " << o.svg << " (" << svg.size() << " bytes)\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Colorful transversal toolkit: certificates for colorful piercing and crossing problems"};
    app.name("ctrans");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Random seed (env CT_SEED)")->envname("CT_SEED");

    auto instance_opts = [&](CLI::App* c) {
        c->add_option("--instance", o.instance, "Instance document (JSON)");
        c->add_option("--fixture", o.fixture, "Named built-in instance")
            ->check(CLI::IsMember(canonical_names()));
    };
    auto* check = app.add_subcommand("check", "Verify the colorful hypothesis, or a certificate");
    instance_opts(check);
    check->add_option("--certificate", o.certificate, "Certificate or command output to re-verify");
    auto* sweep = app.add_subcommand("sweep", "Line transversal of the union, or a pairwise-intersecting index");
    instance_opts(sweep);
    sweep->add_option("--resolution", o.resolution, "Uniform angle grid added to the exact events")->capture_default_str();
    auto* kkm = app.add_subcommand("kkm", "Two crossing lines or one piercing point");
    instance_opts(kkm);
    kkm->add_option("--max-depth", o.max_depth, "Deepest subdivision level (2^depth steps)")->capture_default_str();
    auto* pierce = app.add_subcommand("pierce", "Piercing points for translates of one body");
    instance_opts(pierce);
    pierce->add_option("--mode", o.mode, "Pipeline")
        ->check(CLI::IsMember({"cw3", "neardisk3", "general9", "cw4", "general8"}))
        ->capture_default_str();
    auto* gadgets = app.add_subcommand("gadgets", "Verify every covering gadget");
    gadgets->add_option("--pitch", o.pitch, "Grid pitch")->capture_default_str();
    gadgets->add_option("--angles", o.angles, "Sampled rotations")->capture_default_str();
    auto* oracle = app.add_subcommand("oracle", "Exact piercing number of every family");
    instance_opts(oracle);
    oracle->add_option("--k-max", o.k_max, "Largest count searched exactly (at most 6)")->capture_default_str();
    auto* fuzz = app.add_subcommand("fuzz", "Search colorful circle families needing 5 points");
    fuzz->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
    fuzz->add_option("--sizes", o.sizes, "Family sizes, as A,B")->capture_default_str();
    auto* gen = app.add_subcommand("generate", "Emit a seeded random instance document");
    gen->add_option("--body", o.body, "Body; polygons gives general convex sets, one family per size, at most max size each")
        ->check(CLI::IsMember({"disk", "reuleaux3", "reuleaux5", "square", "12gon", "hexagon", "polygons"}))
        ->capture_default_str();
    gen->add_option("--sizes", o.sizes, "Family sizes, comma separated")->capture_default_str();
    gen->add_option("--spread", o.spread, "Sampling box half-side in body radii")->capture_default_str();
    auto* render = app.add_subcommand("render", "Draw an instance and optional certificate as SVG");
    instance_opts(render);
    render->add_option("--certificate", o.certificate, "Certificate or command output to draw");
    render->add_option("--svg", o.svg, "Output path")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        // The top-level help lists every subcommand with all of its flags.
        if (app.get_subcommands().empty()) {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        }
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "check") return cmd_check(o, out, err);
        if (cmd == "sweep") return cmd_sweep(o, out, err);
        if (cmd == "kkm") return cmd_kkm(o, out, err);
        if (cmd == "pierce") return cmd_pierce(o, out, err);
        if (cmd == "gadgets") return cmd_gadgets(o, out, err);
        if (cmd == "oracle") return cmd_oracle(o, out, err);
        if (cmd == "fuzz") return cmd_fuzz(o, out, err);
        if (cmd == "generate") return cmd_generate(o, out, err);
        return cmd_render(o, out, err);
    } catch (const Error& e) {
        Json doc = base(cmd);
        doc["error"] = e.code();
        doc["message"] = e.what();
        emit(out, doc);
        err << e.code() << ": " << e.what() << "\n";
        return e.code() == "NotNearDisk" ? 2 : 1;
    } catch (const std::exception& e) {
        Json doc = base(cmd);
        doc["error"] = "InternalError";
        doc["message"] = e.what();
        emit(out, doc);
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ct
