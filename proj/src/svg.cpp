#include "ct/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ct {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct View {
    double x0, y0, x1, y1, scale;
    // SVG y grows downward.
    std::string at(Point p) const { return num((p.x - x0) * scale) + "," + num((y1 - p.y) * scale); }
};

std::string path(const View& v, const std::vector<Point>& pts) {
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) d += (i ? " L" : "M") + v.at(pts[i]);
    return d + " Z";
}

}  // namespace

std::string render_svg(const ColoredInstance& inst, const std::optional<AnyCertificate>& cert, const SvgOptions& opt) {
    std::vector<Point> all = inst.sample_points(64);
    const PiercingCertificate* pc = cert ? std::get_if<PiercingCertificate>(&*cert) : nullptr;
    if (pc) all.insert(all.end(), pc->points.begin(), pc->points.end());
    double x0 = all.front().x, x1 = x0, y0 = all.front().y, y1 = y0;
    for (const Point& p : all) {
        x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
    x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
    const View v{x0, y0, x1, y1, opt.width_px / (x1 - x0)};
    const double h = (y1 - y0) * v.scale;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opt.width_px) << "\" height=\""
        << num(h) << "\" viewBox=\"0 0 " << num(opt.width_px) << " " << num(h) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out << "<g id=\"sets\" fill-opacity=\"0.15\" stroke-width=\"1\">\n";
    for (const SetRef& r : inst.refs()) {
        const char* color = kPalette[r.family % std::size(kPalette)];
        out << "<path d=\"" << path(v, inst.inscribed(r, opt.curve_sides).vertices()) << "\" fill=\"" << color
            << "\" stroke=\"" << color << "\"/>\n";
    }
    out << "</g>\n";

    if (pc && pc->region.size() >= 3)
        out << "<g id=\"region\"><path d=\"" << path(v, pc->region)
            << "\" fill=\"none\" stroke=\"#555\" stroke-dasharray=\"4 3\"/></g>\n";
    if (pc && pc->frame) {
        std::vector<Point> pent;
        for (const Point& q : canonical_pentagon().vertices()) pent.push_back((*pc->frame)(q));
        out << "<g id=\"pentagon\"><path d=\"" << path(v, pent) << "\" fill=\"none\" stroke=\"#000\"/></g>\n";
    }

    std::vector<Line> lines;
    std::vector<Point> points;
    if (pc) {
        lines = pc->lines;
        points = pc->points;
    } else if (cert) {
        if (const auto* k = std::get_if<KkmCertificate>(&*cert)) {
            if (const auto* t = std::get_if<TwoLines>(k)) {
                lines.push_back(t->first);
                if (t->second) lines.push_back(*t->second);
            }
            if (const auto* p = std::get_if<PiercePoint>(k)) points.push_back(p->p);
        }
        if (const auto* s = std::get_if<SweepOutcome>(&*cert))
            if (const auto* u = std::get_if<UnionTransversal>(s)) lines.push_back(u->line);
    }
    out << "<g id=\"lines\" stroke=\"#333\" stroke-width=\"1.2\">\n";
    const double reach = 2 * std::max(x1 - x0, y1 - y0) + std::abs(x0) + std::abs(y0) + std::abs(x1) + std::abs(y1);
    for (const Line& l : lines) {
        const Point a = l.point() - reach * l.along(), b = l.point() + reach * l.along();
        const auto pa = v.at(a), pb = v.at(b);
        out << "<line x1=\"" << pa.substr(0, pa.find(',')) << "\" y1=\"" << pa.substr(pa.find(',') + 1) << "\" x2=\""
            << pb.substr(0, pb.find(',')) << "\" y2=\"" << pb.substr(pb.find(',') + 1) << "\"/>\n";
    }
    out << "</g>\n<g id=\"points\" fill=\"#000\">\n";
    for (const Point& p : points) {
        const auto c = v.at(p);
        out << "<circle cx=\"" << c.substr(0, c.find(',')) << "\" cy=\"" << c.substr(c.find(',') + 1) << "\" r=\"3\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace ct
