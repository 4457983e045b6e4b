#include "polyangle/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "polyangle/polygonize.hpp"

namespace polyangle {

namespace {

constexpr double kPi = std::numbers::pi;

const char* kLayerPalette[] = {"#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
                               "#e377c2", "#bcbd22", "#8c564b", "#7f7f7f", "#aec7e8"};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string path_of(const Polygon& p, const PointSet& s) {
    std::string d;
    for (int i = 0; i < p.size(); ++i) {
        d += (i == 0 ? "M " : "L ");
        d += num(s[p.vertex(i)].x) + " " + num(s[p.vertex(i)].y) + " ";
    }
    d += "Z";
    return d;
}

} // namespace

std::string render_svg(const PointSet& s, const Polygon& p, const SvgOptions& opt) {
    double xmin = s[0].x, xmax = s[0].x, ymin = s[0].y, ymax = s[0].y;
    for (int i = 1; i < s.size(); ++i) {
        xmin = std::min(xmin, s[i].x);
        xmax = std::max(xmax, s[i].x);
        ymin = std::min(ymin, s[i].y);
        ymax = std::max(ymax, s[i].y);
    }
    const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
    const double w = (xmax - xmin) + 2.0 * margin;
    const double h = (ymax - ymin) + 2.0 * margin;
    const double sw = 0.004 * std::max(w, h); // stroke width in data units

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(xmin - margin) + " " +
           num(ymin - margin) + " " + num(w) + " " + num(h) + "\">\n";
    // Keep math coordinates (y up) in the path data and flip once here.
    svg += "<g transform=\"translate(0," + num(ymin + ymax) + ") scale(1,-1)\">\n";

    Hull hull;
    const bool need_hull = opt.hull || opt.segments;
    if (need_hull) hull = convex_hull(s);

    if (opt.hull) {
        Polygon hp;
        hp.chain = hull.vertices;
        svg += "<path d=\"" + path_of(hp, s) + "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" +
               num(sw) + "\" stroke-dasharray=\"" + num(4.0 * sw) + " " + num(3.0 * sw) + "\"/>\n";
    }

    if (opt.segments) {
        const int m = hull.m();
        const double u = 2.0 * kPi / static_cast<double>(m); // inscribed angle on the arc
        const int large = beta_max(m) > kPi ? 1 : 0;
        for (int j = 0; j < m; ++j) {
            const auto [ia, ib] = hull.edge(j);
            const Point& a = s[ia];
            const Point& b = s[ib];
            const double chord = std::hypot(b.x - a.x, b.y - a.y);
            const double radius = chord / (2.0 * std::sin(u));
            // Left-bulging arc from a to b runs clockwise in math coordinates.
            svg += "<path d=\"M " + num(a.x) + " " + num(a.y) + " A " + num(radius) + " " +
                   num(radius) + " 0 " + std::to_string(large) + " 0 " + num(b.x) + " " + num(b.y) +
                   "\" fill=\"none\" stroke=\"#88aadd\" stroke-width=\"" + num(0.7 * sw) + "\"/>\n";
        }
    }

    svg += "<path d=\"" + path_of(p, s) + "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"" +
           num(1.5 * sw) + "\"/>\n";

    std::vector<int> layer_of(static_cast<size_t>(s.size()), -1);
    if (opt.layers) {
        const OnionPeeling peeling = onion_depth(s);
        for (size_t t = 0; t < peeling.layers.size(); ++t)
            for (const auto& [e, idx] : peeling.layers[t])
                layer_of[static_cast<size_t>(idx)] = static_cast<int>(t);
    }
    const size_t palette_n = sizeof(kLayerPalette) / sizeof(kLayerPalette[0]);
    for (int i = 0; i < s.size(); ++i) {
        const int layer = layer_of[static_cast<size_t>(i)];
        const char* color = layer < 0 ? "#333333" : kLayerPalette[static_cast<size_t>(layer) % palette_n];
        svg += "<circle cx=\"" + num(s[i].x) + "\" cy=\"" + num(s[i].y) + "\" r=\"" + num(2.0 * sw) +
               "\" fill=\"" + std::string(color) + "\"/>\n";
    }

    svg += "</g>\n</svg>\n";
    return svg;
}

} // namespace polyangle
