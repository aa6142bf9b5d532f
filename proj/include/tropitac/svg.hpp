// tropitac/svg.hpp - drawings of a tropical curve next to its dual subdivision
#pragma once

#include "tropical.hpp"

#include <cstdio>
#include <sstream>
#include <string>

namespace tropitac::svg {

using lattice::Int;
using lattice::LatticePoint;
using tropical::DualSubdivision;
using tropical::TropicalCurve;

namespace detail {

constexpr double kPanel = 400, kMargin = 20;

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Square window [x0, x0 + side] x [y0, y0 + side] in figure units, mapped into a panel.
struct Window {
    Rational x0, y0, side;
    double offset = 0;
    double px(const Rational& x) const { return offset + kMargin + to_double((x - x0) / side) * (kPanel - 2 * kMargin); }
    double py(const Rational& y) const { return kMargin + to_double((y0 + side - y) / side) * (kPanel - 2 * kMargin); }
};

inline Window window(Rational lo_x, Rational hi_x, Rational lo_y, Rational hi_y, const Rational& pad, double offset) {
    Rational w = hi_x - lo_x, h = hi_y - lo_y;
    Rational side = (w > h ? w : h) + 2 * pad;
    return {(lo_x + hi_x - side) / 2, (lo_y + hi_y - side) / 2, side, offset};
}

inline std::string glyph(const char* cls, double cx, double cy, double r,
                         const std::vector<std::pair<double, double>>& unit) {
    std::string pts;
    for (const auto& [u, v] : unit) pts += (pts.empty() ? "" : " ") + num(cx + r * u) + "," + num(cy + r * v);
    return std::string("<polygon class=\"") + cls + "\" points=\"" + pts + "\"/>\n";
}

inline const std::vector<std::pair<double, double>>& star_shape() {
    static const std::vector<std::pair<double, double>> s = {
        {0, -1},         {0.235, -0.324}, {0.951, -0.309}, {0.380, 0.124},  {0.588, 0.809},
        {0, 0.4},        {-0.588, 0.809}, {-0.380, 0.124}, {-0.951, -0.309}, {-0.235, -0.324}};
    return s;
}

inline const std::vector<std::pair<double, double>>& triangle_shape() {
    static const std::vector<std::pair<double, double>> s = {{0, -1}, {0.866, 0.5}, {-0.866, 0.5}};
    return s;
}

}  // namespace detail

// Curve coordinates are multiplied by the lcm L of their denominators, so every vertex is
// integral in the figure; only the final pixel positions are floating point.
inline Integer curve_scale(const TropicalCurve& C) {
    Integer L = 1;
    for (const auto& v : C.vertices) L = lcm(lcm(L, denominator(v.x)), denominator(v.y));
    return L;
}

inline std::string render(const TropicalCurve& C, const DualSubdivision& S) {
    using detail::num;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * detail::kPanel << "\" height=\""
      << detail::kPanel << "\" viewBox=\"0 0 " << 2 * detail::kPanel << " " << detail::kPanel << "\">\n";
    o << "<style>.edge,.ray{stroke:#000;stroke-width:1.5}.cell{fill:none;stroke:#000}"
         ".star,.triangle{fill:#000}.vertex{fill:#000}.weight{font:12px sans-serif}</style>\n";

    // curve panel
    Integer L = curve_scale(C);
    std::vector<std::pair<Rational, Rational>> P;
    for (const auto& v : C.vertices) P.push_back({v.x * L, v.y * L});
    Rational lx = P[0].first, hx = lx, ly = P[0].second, hy = ly;
    for (const auto& [x, y] : P) {
        lx = std::min(lx, x);
        hx = std::max(hx, x);
        ly = std::min(ly, y);
        hy = std::max(hy, y);
    }
    Rational span = std::max(hx - lx, hy - ly);
    Rational quarter = span / 4;
    Rational pad = std::max(Rational(L), quarter);
    auto W = detail::window(lx, hx, ly, hy, pad, 0);
    o << "<g class=\"curve\" data-scale=\"" << L.str() << "\">\n";
    auto weight_label = [&](Int w, const Rational& x, const Rational& y) {
        if (w > 1) o << "<text class=\"weight\" x=\"" << num(W.px(x) + 4) << "\" y=\"" << num(W.py(y) - 4) << "\">" << w << "</text>\n";
    };
    for (const auto& e : C.bounded_edges) {
        const auto& [ax, ay] = P[e.from];
        const auto& [bx, by] = P[e.to];
        o << "<line class=\"edge\" x1=\"" << num(W.px(ax)) << "\" y1=\"" << num(W.py(ay)) << "\" x2=\"" << num(W.px(bx))
          << "\" y2=\"" << num(W.py(by)) << "\"/>\n";
        weight_label(e.weight, (ax + bx) / 2, (ay + by) / 2);
    }
    for (const auto& r : C.rays) {
        const auto& [ax, ay] = P[r.from];
        // exact exit parameter from the window
        std::optional<Rational> t;
        auto bound = [&](Int d, const Rational& a, const Rational& lo) {
            if (d == 0) return;
            Rational edge = d > 0 ? lo + W.side : lo;
            Rational s = (edge - a) / d;
            if (!t || s < *t) t = s;
        };
        bound(r.direction.i, ax, W.x0);
        bound(r.direction.j, ay, W.y0);
        Rational bx = ax + *t * r.direction.i, by = ay + *t * r.direction.j;
        o << "<line class=\"ray\" x1=\"" << num(W.px(ax)) << "\" y1=\"" << num(W.py(ay)) << "\" x2=\"" << num(W.px(bx))
          << "\" y2=\"" << num(W.py(by)) << "\"/>\n";
        weight_label(r.weight, (ax + 3 * bx) / 4, (ay + 3 * by) / 4);
    }
    for (const auto& [x, y] : P)
        o << "<circle class=\"vertex\" cx=\"" << num(W.px(x)) << "\" cy=\"" << num(W.py(y)) << "\" r=\"3\"/>\n";
    o << "</g>\n";

    // subdivision panel
    auto [lo, hi] = S.newton.bbox();
    auto V = detail::window(lo.i, hi.i, lo.j, hi.j, Rational(1, 2), detail::kPanel);
    o << "<g class=\"subdivision\">\n";
    for (const auto& c : S.cells) {
        std::string pts;
        for (const auto& v : c.polytope.vertices())
            pts += (pts.empty() ? "" : " ") + num(V.px(v.i)) + "," + num(V.py(v.j));
        o << "<polygon class=\"cell\" points=\"" << pts << "\"/>\n";
    }
    for (const auto& p : S.newton.lattice_points()) {
        double cx = V.px(p.i), cy = V.py(p.j);
        int where = S.newton.locate(p);
        if (where > 0)
            o << detail::glyph("star", cx, cy, 6, detail::star_shape());
        else if (!S.newton.is_vertex(p))
            o << detail::glyph("triangle", cx, cy, 5, detail::triangle_shape());
        if (S.vertices.count(p)) o << "<circle class=\"vertex\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"2.5\"/>\n";
    }
    o << "</g>\n</svg>\n";
    return o.str();
}

}  // namespace tropitac::svg
