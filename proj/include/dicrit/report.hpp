// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_REPORT_HPP
#define DICRIT_REPORT_HPP

#include <json.hpp>
#include <sstream>
#include <string>

#include "dicrit/infinity.hpp"
#include "dicrit/printer.hpp"
#include "dicrit/render.hpp"

namespace dicrit {

using json = nlohmann::ordered_json;

// Every number in a report is an exact string; counts and exponents are
// JSON integers. Reports are byte-identical across runs for the same input.

template <class F>
json step_json(const F& f, const NodeStep<F>& st) {
    json j;
    switch (st.type) {
        case StepType::Root:
            j["type"] = "root";
            break;
        case StepType::Toric:
            j["type"] = "toric";
            j["n"] = st.toric->edge.n;
            j["m"] = st.toric->edge.m;
            j["a"] = st.toric->a;
            j["b"] = st.toric->b;
            j["alpha"] = f.str(st.toric->alpha);
            j["multiplicity"] = st.toric->multiplicity;
            break;
        case StepType::Absorb:
            j["type"] = "absorb";
            j["m"] = st.absorb->edge.m;
            j["root"] = f.str(st.absorb->root);
            break;
    }
    return j;
}

template <class F>
json polygon_json(const F& f, const PencilPoly<F>& p, const std::vector<Edge>& edges) {
    json jp;
    json verts = json::array();
    for (const auto& [i, j] : newton_hull_vertices(p)) verts.push_back(json::array({i, j}));
    jp["vertices"] = verts;
    json je = json::array();
    for (const Edge& e : edges) {
        EdgeSupport<F> sup = edge_data(p, e);
        json one;
        one["n"] = e.n;
        one["m"] = e.m;
        one["omega"] = e.omega;
        one["d"] = e.d;
        one["kind"] = edge_kind_name(e.kind);
        one["q0"] = sup.q0.to_string();
        one["gamma"] = f.str(sup.gamma);
        je.push_back(one);
    }
    jp["edges"] = je;
    return jp;
}

template <class F>
json tree_json(const ResolutionTree<F>& tree) {
    json out = json::array();
    for (const auto& node : tree.nodes) {
        const F& f = node.pencil.P.field();
        json jn;
        jn["id"] = node.id;
        if (node.parent < 0)
            jn["parent"] = nullptr;
        else
            jn["parent"] = node.parent;
        jn["depth"] = node.depth;
        jn["step"] = step_json(f, node.step);
        jn["polygon"] = polygon_json(f, node.pencil.P, node.polygon);
        out.push_back(jn);
    }
    return out;
}

template <class F>
json dicriticals_json(const ResolutionTree<F>& tree, const PencilReport<F>& rep) {
    json out = json::array();
    for (std::size_t i = 0; i < tree.dicriticals.size(); ++i) {
        const auto& rec = tree.dicriticals[i];
        const auto& a = rep.analyses[i];
        const F& f = rec.q_E.field();
        json j;
        j["id"] = rec.id;
        j["node"] = rec.node;
        j["path_ratios"] = rec.ratio_chain;
        j["n"] = rec.n_E;
        j["m"] = rec.m_E;
        j["d_E"] = rec.d_E;
        j["q_E"] = rec.q_E.to_string();
        j["gamma"] = f.str(rec.gamma);
        j["t0"] = f.str(rec.t0);
        j["separable"] = a.separable;
        if (a.separable) {
            j["A_E_poly"] = a.A_E_poly.to_string();
            j["atypical_poly"] = a.atypical_poly.to_string();
            json vals = json::array();
            for (const auto& v : a.rational_atypical) vals.push_back(f.str(v));
            j["rational_atypical"] = vals;
            j["includes_t0"] = a.includes_t0;
            j["M_E"] = a.M_bound;
        } else {
            j["A_E_poly"] = nullptr;
            j["atypical_poly"] = nullptr;
            j["rational_atypical"] = json::array();
            j["includes_t0"] = nullptr;
            j["M_E"] = nullptr;
        }
        j["residual_flag"] = rec.residual_flag;
        out.push_back(j);
    }
    return out;
}

template <class F>
json summary_json(const ResolutionTree<F>& tree, const PencilReport<F>& rep) {
    const F& f = tree.nodes.front().pencil.P.field();
    json s;
    s["y_order"] = tree.root_y_order;
    s["c"] = tree.nodes.front().pencil.c;
    s["nu_gen"] = rep.nu_gen;
    s["bound_sum"] = rep.bound_sum;
    s["gw_bound_gen"] = rep.gw_bound_gen;
    s["atypical_count"] = rep.atypical_count;
    s["atypical_union_poly"] = rep.atypical_union_poly.to_string();
    json vals = json::array();
    for (const auto& v : rep.rational_atypical_union) vals.push_back(f.str(v));
    s["rational_atypical"] = vals;
    if (!tree.has_residuals()) {
        auto ident = degree_identity(tree);
        s["degree_identity"] = {{"lhs", ident.lhs}, {"rhs", ident.rhs}, {"ok", ident.ok},
                                {"per_dicritical", ident.per_dicritical}};
    } else {
        s["degree_identity"] = nullptr;
    }
    if (!rep.any_inseparable) {
        auto flags = extremality_flags(tree, rep);
        json fl;
        json per = json::array();
        for (const auto& d : flags.per_dicritical)
            per.push_back({{"id", d.record_id},
                           {"bamboo", d.bamboo},
                           {"t0_not_critical", d.t0_not_critical},
                           {"qprime_squarefree", d.qprime_squarefree},
                           {"critical_values_distinct", d.critical_values_distinct}});
        fl["per_dicritical"] = per;
        fl["pairwise_disjoint"] = flags.pairwise_disjoint;
        fl["all"] = flags.all();
        s["extremality_flags"] = fl;
    } else {
        s["extremality_flags"] = nullptr;
    }
    s["warnings"] = rep.warnings;
    return s;
}

template <class F>
json pencil_report_json(const F& f, const std::string& input, const ResolutionTree<F>& tree,
                        const PencilReport<F>& rep) {
    json j;
    j["field"] = f.name();
    j["input"] = input;
    j["tree"] = tree_json(tree);
    j["dicriticals"] = dicriticals_json(tree, rep);
    j["summary"] = summary_json(tree, rep);
    return j;
}

template <class F>
json infinity_report_json(const F& f, const std::string& input, const InfinityReport<F>& rep) {
    json j;
    j["field"] = f.name();
    j["input"] = input;
    j["degree"] = rep.job.degree;
    j["top_form"] = pencil_to_string(rep.job.top_form);
    json pts = json::array();
    for (const auto& pr : rep.points) {
        json p;
        p["point"] = pr.point.label(f);
        p["multiplicity"] = pr.point.multiplicity;
        p["pencil"] = pencil_to_string(pr.tree.nodes.front().pencil.P, 'z',
                                       pr.point.at_y_axis ? 'x' : 'y');
        p["tree"] = tree_json(pr.tree);
        p["dicriticals"] = dicriticals_json(pr.tree, pr.report);
        p["summary"] = summary_json(pr.tree, pr.report);
        pts.push_back(p);
    }
    j["points"] = pts;
    json s;
    s["nu_inf_gen"] = rep.nu_inf_gen;
    s["bound_sum"] = rep.bound_sum;
    s["atypical_count"] = rep.atypical_count;
    s["atypical_union_poly"] = rep.atypical_union_poly.to_string();
    json vals = json::array();
    for (const auto& v : rep.rational_atypical) vals.push_back(f.str(v));
    s["rational_atypical"] = vals;
    s["extremal"] = rep.extremal;
    s["warnings"] = rep.warnings;
    j["summary"] = s;
    return j;
}

// ---------------------------------------------------------------------------
// human-readable text
// ---------------------------------------------------------------------------

template <class F>
std::string pencil_report_text(const F& f, const ResolutionTree<F>& tree, const PencilReport<F>& rep) {
    std::ostringstream s;
    s << "resolution tree (" << tree.nodes.size() << " nodes)\n";
    for (const auto& node : tree.nodes) {
        s << "  node " << node.id << " depth " << node.depth;
        if (node.step.type == StepType::Toric)
            s << "  toric n=" << node.step.toric->edge.n << " m=" << node.step.toric->edge.m
              << " alpha=" << f.str(node.step.toric->alpha) << " mult=" << node.step.toric->multiplicity;
        else if (node.step.type == StepType::Absorb)
            s << "  absorb root=" << f.str(node.step.absorb->root) << " m=" << node.step.absorb->edge.m;
        else
            s << "  root";
        s << "  edges:";
        for (const Edge& e : node.polygon)
            s << " (" << e.i1 << "," << e.j1 << ")-(" << e.i2 << "," << e.j2 << ") "
              << edge_kind_name(e.kind);
        s << "\n";
    }
    s << "dicriticals (" << tree.dicriticals.size() << ")\n";
    for (std::size_t i = 0; i < tree.dicriticals.size(); ++i) {
        const auto& rec = tree.dicriticals[i];
        const auto& a = rep.analyses[i];
        s << "  E" << rec.id << ": node " << rec.node << "  d_E=" << rec.d_E << " n=" << rec.n_E
          << " m=" << rec.m_E << "  q_E = " << rec.q_E.to_string() << "  t0 = " << f.str(rec.t0);
        if (!a.separable) {
            s << "  [inseparable]";
        } else {
            s << "  atypical: " << a.atypical_poly.to_string() << " = 0";
            if (!a.rational_atypical.empty()) {
                s << "  roots {";
                for (std::size_t k = 0; k < a.rational_atypical.size(); ++k)
                    s << (k ? ", " : "") << f.str(a.rational_atypical[k]);
                s << "}";
            }
            s << "  M_E=" << a.M_bound;
        }
        s << "\n";
    }
    s << "summary: nu_gen=" << rep.nu_gen << "  bound_sum=" << rep.bound_sum
      << "  atypical_count=" << rep.atypical_count << "  atypical_union = "
      << rep.atypical_union_poly.to_string();
    if (!rep.rational_atypical_union.empty()) {
        s << "  values {";
        for (std::size_t k = 0; k < rep.rational_atypical_union.size(); ++k)
            s << (k ? ", " : "") << f.str(rep.rational_atypical_union[k]);
        s << "}";
    }
    s << "\n";
    for (const auto& w : rep.warnings) s << "warning: " << w << "\n";
    return s.str();
}

template <class F>
std::string infinity_report_text(const F& f, const InfinityReport<F>& rep) {
    std::ostringstream s;
    s << "degree " << rep.job.degree << ", top form " << pencil_to_string(rep.job.top_form) << ", "
      << rep.points.size() << " base point(s)\n";
    for (const auto& pr : rep.points) {
        s << "== point " << pr.point.label(f) << " (multiplicity " << pr.point.multiplicity << ") ==\n";
        s << pencil_report_text(f, pr.tree, pr.report);
    }
    s << "atypical values at infinity: " << rep.atypical_union_poly.to_string() << " = 0";
    if (!rep.rational_atypical.empty()) {
        s << "  values {";
        for (std::size_t k = 0; k < rep.rational_atypical.size(); ++k)
            s << (k ? ", " : "") << f.str(rep.rational_atypical[k]);
        s << "}";
    }
    s << "\nnu_inf_gen=" << rep.nu_inf_gen << "  atypical_count=" << rep.atypical_count
      << "  extremal=" << (rep.extremal ? "yes" : "no") << "\n";
    for (const auto& w : rep.warnings) s << "warning: " << w << "\n";
    return s.str();
}

// sketch for the SVG / TikZ renderers
template <class F>
PolygonSketch polygon_sketch(const PencilPoly<F>& p, long c, char xlabel, char ylabel) {
    PolygonSketch sk;
    for (const auto& [k, coef] : p.terms()) sk.support.push_back(k);
    sk.vertices = newton_hull_vertices(p);
    const F& f = p.field();
    if (c >= 0 && !f.is_zero(p.coeff(c, 0).b)) sk.t_vertex_i = c;
    sk.x_label = std::string(1, xlabel);
    sk.y_label = std::string(1, ylabel);
    return sk;
}

}  // namespace dicrit

#endif
