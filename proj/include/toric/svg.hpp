/**
 * Deterministic SVG drawings of planar polytopes: the region, its facet
 * edges, vertices and marked points. Unbounded regions are clipped to a box
 * around the vertices.
 */
#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

namespace detail {

inline std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

// Counter-clockwise order around an interior point, exactly.
inline void sort_ccw(std::vector<RatVec>& pts, const RatVec& c) {
    auto half = [&](const RatVec& p) {
        Rational dx = p[0] - c[0], dy = p[1] - c[1];
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RatVec& a, const RatVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
        return cross > 0;
    });
}

}  // namespace detail

inline std::string render_svg(const Polytope& p, const std::vector<RatVec>& marked = {},
                              const std::string& title = {}) {
    if (p.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "render needs a planar polytope");

    // clip box around vertices and marked points, padded on every side
    auto vs = vertices(p);
    std::vector<RatVec> anchors;
    for (const auto& v : vs) anchors.push_back(v.point);
    for (const auto& m : marked) anchors.push_back(m);
    if (anchors.empty()) anchors.push_back(RatVec(2));
    Rational lo[2] = {anchors[0][0], anchors[0][1]}, hi[2] = {anchors[0][0], anchors[0][1]};
    for (const auto& a : anchors)
        for (int k = 0; k < 2; ++k) {
            lo[k] = std::min(lo[k], a[k]);
            hi[k] = std::max(hi[k], a[k]);
        }
    const bool bounded = is_compact(p);
    const Rational pad = bounded ? Rational(Integer(1), Integer(4)) : Rational(1);
    for (int k = 0; k < 2; ++k) {
        lo[k] -= pad;
        hi[k] += pad;
    }

    std::vector<Facet> clipped = p.facets();
    if (!bounded) {
        clipped.push_back({{Integer(1), Integer(0)}, -lo[0]});
        clipped.push_back({{Integer(-1), Integer(0)}, hi[0]});
        clipped.push_back({{Integer(0), Integer(1)}, -lo[1]});
        clipped.push_back({{Integer(0), Integer(-1)}, hi[1]});
        clipped = prune_facets(2, std::move(clipped));
    }
    Polytope region(2, clipped);
    std::vector<RatVec> corners;
    for (const auto& v : vertices(region)) corners.push_back(v.point);
    RatVec centre(2);
    for (const auto& c : corners)
        for (int k = 0; k < 2; ++k) centre[k] += c[k];
    for (int k = 0; k < 2; ++k) centre[k] /= Rational(static_cast<long>(corners.size()));
    detail::sort_ccw(corners, centre);

    const double size = 400, margin = 20;
    const double w = Rational(hi[0] - lo[0]).convert_to<double>(), h = Rational(hi[1] - lo[1]).convert_to<double>();
    const double scale = (size - 2 * margin) / std::max(w, h);
    auto sx = [&](const Rational& x) { return detail::fmt3(margin + Rational(x - lo[0]).convert_to<double>() * scale); };
    auto sy = [&](const Rational& y) { return detail::fmt3(size - margin - Rational(y - lo[1]).convert_to<double>() * scale); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
    if (!title.empty()) {
        std::string esc;
        for (char ch : title) {
            if (ch == '<') esc += "&lt;";
            else if (ch == '>') esc += "&gt;";
            else if (ch == '&') esc += "&amp;";
            else esc += ch;
        }
        out += "  <title>" + esc + "</title>\n";
    }
    out += "  <polygon points=\"";
    for (std::size_t i = 0; i < corners.size(); ++i)
        out += (i ? " " : "") + sx(corners[i][0]) + "," + sy(corners[i][1]);
    out += "\" fill=\"#dde8f4\" stroke=\"none\"/>\n";

    // one segment per original facet: the two clipped corners it passes through
    for (std::size_t i = 0; i < p.facet_count(); ++i) {
        std::vector<RatVec> on;
        for (const auto& c : corners)
            if (p.slack(i, c) == 0) on.push_back(c);
        if (on.size() < 2) continue;
        out += "  <line x1=\"" + sx(on[0][0]) + "\" y1=\"" + sy(on[0][1]) + "\" x2=\"" + sx(on[1][0]) +
               "\" y2=\"" + sy(on[1][1]) + "\" stroke=\"#1f3b5c\" stroke-width=\"2\" data-facet=\"" +
               std::to_string(i) + "\"/>\n";
    }
    for (const auto& v : vs)
        out += "  <circle cx=\"" + sx(v.point[0]) + "\" cy=\"" + sy(v.point[1]) + "\" r=\"3\" fill=\"#1f3b5c\"/>\n";
    for (const auto& m : marked)
        out += "  <circle cx=\"" + sx(m[0]) + "\" cy=\"" + sy(m[1]) +
               "\" r=\"5\" fill=\"#c0392b\" stroke=\"white\" stroke-width=\"1\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace toric
