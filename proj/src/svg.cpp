#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cablefloer/pattern.hpp"

namespace cablefloer {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    if (s == "-0.0000") s = "0.0000";
    return s;
}

}  // namespace

std::string diagram_svg(const BorderedDiagram& d, const TypeAModule* m, int lift_periods) {
    lift_periods = std::max(1, lift_periods);
    const double scale = 80.0, pad = 20.0;
    double xmin = 1e9, xmax = -1e9;
    for (auto& v : d.pts) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
    }
    int64_t x0 = static_cast<int64_t>(std::floor(xmin)), x1 = static_cast<int64_t>(std::ceil(xmax));
    double ylo = d.pts.front().y, yhi = ylo + lift_periods;
    int64_t y0 = static_cast<int64_t>(std::floor(ylo)), y1 = static_cast<int64_t>(std::ceil(yhi));
    double W = static_cast<double>(x1 - x0) * scale + 2 * pad, H = static_cast<double>(y1 - y0) * scale + 2 * pad;
    auto X = [&](double x) { return num(pad + (x - static_cast<double>(x0)) * scale); };
    auto Y = [&](double y) { return num(pad + (static_cast<double>(y1) - y) * scale); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(H) + "\" viewBox=\"0 0 " +
         num(W) + " " + num(H) + "\">\n";
    s += "<title>pattern P(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")</title>\n";
    s += "<rect x=\"" + X(0) + "\" y=\"" + Y(1) + "\" width=\"" + num(scale) + "\" height=\"" + num(scale) +
         "\" fill=\"#f4f4f4\" stroke=\"none\"/>\n";
    for (int64_t j = y0; j <= y1; ++j)
        s += "<line class=\"alpha0\" x1=\"" + X(static_cast<double>(x0)) + "\" y1=\"" + Y(static_cast<double>(j)) +
             "\" x2=\"" + X(static_cast<double>(x1)) + "\" y2=\"" + Y(static_cast<double>(j)) +
             "\" stroke=\"#c03030\" stroke-width=\"1.5\"/>\n";
    for (int64_t i = x0; i <= x1; ++i)
        s += "<line class=\"alpha1\" x1=\"" + X(static_cast<double>(i)) + "\" y1=\"" + Y(static_cast<double>(y0)) +
             "\" x2=\"" + X(static_cast<double>(i)) + "\" y2=\"" + Y(static_cast<double>(y1)) +
             "\" stroke=\"#c08030\" stroke-width=\"1.5\"/>\n";
    for (int64_t i = x0; i <= x1; ++i)
        for (int64_t j = y0; j <= y1; ++j) {
            double zx = static_cast<double>(i) + 0.03, zy = static_cast<double>(j) + 0.03;
            s += "<circle class=\"z\" cx=\"" + X(zx) + "\" cy=\"" + Y(zy) + "\" r=\"3.0000\" fill=\"#000000\"/>\n";
            s += "<circle class=\"w\" cx=\"" + X(static_cast<double>(i) + d.w.x) + "\" cy=\"" +
                 Y(static_cast<double>(j) + d.w.y) + "\" r=\"3.0000\" fill=\"#ffffff\" stroke=\"#000000\"/>\n";
        }
    std::string path;
    for (int k = 0; k < lift_periods; ++k)
        for (size_t i = 0; i < d.pts.size(); ++i) {
            if (k > 0 && i == 0) continue;
            path += (path.empty() ? "M" : " L") + X(d.pts[i].x) + "," + Y(d.pts[i].y + k);
        }
    s += "<path class=\"beta\" d=\"" + path + "\" fill=\"none\" stroke=\"#2050c0\" stroke-width=\"1.5\"/>\n";
    for (int k = 0; k < lift_periods; ++k)
        for (size_t g = 0; g < d.gens.size(); ++g) {
            const auto& c = d.gens[g];
            std::string label = m ? m->ids[g] : d.gen_id(g);
            if (m && g == m->a) label += " (a)";
            if (m && g == m->b1) label += " (b1)";
            s += "<circle class=\"gen\" cx=\"" + X(c.pt.x) + "\" cy=\"" + Y(c.pt.y + k) +
                 "\" r=\"2.5000\" fill=\"#2050c0\"/>\n";
            s += "<text x=\"" + X(c.pt.x + 0.02) + "\" y=\"" + Y(c.pt.y + k + 0.02) +
                 "\" font-size=\"9\" font-family=\"monospace\">" + label + "</text>\n";
        }
    s += "</svg>\n";
    return s;
}

}  // namespace cablefloer
