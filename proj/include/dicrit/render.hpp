// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_RENDER_HPP
#define DICRIT_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

namespace dicrit {

// Field-agnostic picture data for one Newton polygon: integer lattice only.
struct PolygonSketch {
    std::vector<std::pair<long, long>> support;   // all support points (i, j)
    std::vector<std::pair<long, long>> vertices;  // hull chain, decreasing j; >= 1 point
    long t_vertex_i = -1;                         // i of the (c, 0) vertex when T is present there
    std::string x_label = "x";
    std::string y_label = "y";
};

// Deterministic SVG 1.1: dashed unit grid, shaded supp+N^2 region, thick hull
// polyline, support dots, and a "T" tag under the (c,0) vertex.
std::string render_polygon_svg(const PolygonSketch& sk);

// TikZ fragment with the same content.
std::string render_polygon_tikz(const PolygonSketch& sk);

}  // namespace dicrit

#endif
