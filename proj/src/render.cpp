// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include "dicrit/render.hpp"

#include <algorithm>
#include <sstream>

namespace dicrit {

namespace {

constexpr long kUnit = 24;  // pixels per lattice step

struct Box {
    long imax = 1, jmax = 1;
};

Box bounding(const PolygonSketch& sk) {
    Box b;
    for (const auto& [i, j] : sk.support) {
        b.imax = std::max(b.imax, i);
        b.jmax = std::max(b.jmax, j);
    }
    for (const auto& [i, j] : sk.vertices) {
        b.imax = std::max(b.imax, i);
        b.jmax = std::max(b.jmax, j);
    }
    b.imax += 1;
    b.jmax += 1;
    return b;
}

}  // namespace

std::string render_polygon_svg(const PolygonSketch& sk) {
    Box b = bounding(sk);
    const long margin = 30;
    const long w = b.imax * kUnit + 2 * margin;
    const long h = b.jmax * kUnit + 2 * margin;
    auto X = [&](long i) { return margin + i * kUnit; };
    auto Y = [&](long j) { return h - margin - j * kUnit; };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";

    // shaded supp + N^2 region: down the left of the hull, along it, out to the box
    if (!sk.vertices.empty()) {
        s << "  <path fill=\"#dde7f7\" stroke=\"none\" d=\"M " << X(sk.vertices.front().first) << " "
          << Y(b.jmax);
        s << " L " << X(sk.vertices.front().first) << " " << Y(sk.vertices.front().second);
        for (std::size_t k = 1; k < sk.vertices.size(); ++k)
            s << " L " << X(sk.vertices[k].first) << " " << Y(sk.vertices[k].second);
        s << " L " << X(b.imax) << " " << Y(sk.vertices.back().second);
        s << " L " << X(b.imax) << " " << Y(b.jmax);
        s << " Z\"/>\n";
    }

    // dashed lattice grid
    s << "  <g stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"3,3\">\n";
    for (long i = 0; i <= b.imax; ++i)
        s << "    <line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i) << "\" y2=\"" << Y(b.jmax)
          << "\"/>\n";
    for (long j = 0; j <= b.jmax; ++j)
        s << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(j) << "\" x2=\"" << X(b.imax) << "\" y2=\"" << Y(j)
          << "\"/>\n";
    s << "  </g>\n";

    // axes
    s << "  <g stroke=\"#000000\" stroke-width=\"2\">\n";
    s << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(b.imax) << "\" y2=\"" << Y(0)
      << "\"/>\n";
    s << "    <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(b.jmax)
      << "\"/>\n";
    s << "  </g>\n";
    s << "  <text x=\"" << X(b.imax) - 8 << "\" y=\"" << Y(0) + 20 << "\" font-size=\"14\">" << sk.x_label
      << "</text>\n";
    s << "  <text x=\"" << X(0) - 18 << "\" y=\"" << Y(b.jmax) + 12 << "\" font-size=\"14\">" << sk.y_label
      << "</text>\n";

    // hull polyline
    if (sk.vertices.size() >= 2) {
        s << "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" points=\"";
        for (std::size_t k = 0; k < sk.vertices.size(); ++k) {
            if (k) s << " ";
            s << X(sk.vertices[k].first) << "," << Y(sk.vertices[k].second);
        }
        s << "\"/>\n";
    }

    // support points
    for (const auto& [i, j] : sk.support)
        s << "  <circle cx=\"" << X(i) << "\" cy=\"" << Y(j) << "\" r=\"3\" fill=\"#000000\"/>\n";
    // hull corners are marked even when they carry no K-term (the T vertex)
    for (const auto& [i, j] : sk.vertices)
        s << "  <circle cx=\"" << X(i) << "\" cy=\"" << Y(j) << "\" r=\"3\" fill=\"#000000\"/>\n";

    if (sk.t_vertex_i >= 0)
        s << "  <text x=\"" << X(sk.t_vertex_i) - 4 << "\" y=\"" << Y(0) + 20 << "\" font-size=\"14\">T</text>\n";

    s << "</svg>\n";
    return s.str();
}

std::string render_polygon_tikz(const PolygonSketch& sk) {
    Box b = bounding(sk);
    std::ostringstream s;
    s << "\\begin{tikzpicture}[scale=.5,vertice/.style={draw,circle,fill,minimum size=0.15cm,inner sep=0}]\n";
    if (!sk.vertices.empty()) {
        s << "\\draw[fill, color=blue!10!white] (" << sk.vertices.front().first << "," << b.jmax << ")";
        for (const auto& [i, j] : sk.vertices) s << "--(" << i << "," << j << ")";
        s << "--(" << b.imax << "," << sk.vertices.back().second << ")--(" << b.imax << "," << b.jmax
          << ")--cycle;\n";
    }
    s << "\\draw[help lines,step=1,dashed] (0,0) grid (" << b.imax << "," << b.jmax << ");\n";
    s << "\\draw[very thick] (" << b.imax << ",0)--(0,0)--(0," << b.jmax << ");\n";
    s << "\\node at (-.7," << b.jmax << ") {$" << sk.y_label << "$};\n";
    s << "\\node at (" << b.imax << ",-.7) {$" << sk.x_label << "$};\n";
    if (sk.vertices.size() >= 2) {
        s << "\\draw[very thick] ";
        for (std::size_t k = 0; k < sk.vertices.size(); ++k) {
            if (k) s << "--";
            s << "(" << sk.vertices[k].first << "," << sk.vertices[k].second << ")";
        }
        s << ";\n";
    }
    for (const auto& [i, j] : sk.support) s << "\\node[vertice] at (" << i << "," << j << ") {};\n";
    for (const auto& [i, j] : sk.vertices) s << "\\node[vertice] at (" << i << "," << j << ") {};\n";
    if (sk.t_vertex_i >= 0) s << "\\node[below] at (" << sk.t_vertex_i << ",-.1) {$T$};\n";
    s << "\\end{tikzpicture}\n";
    return s.str();
}

}  // namespace dicrit
