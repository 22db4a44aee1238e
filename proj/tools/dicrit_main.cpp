// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dicrit/hensel.hpp"
#include "dicrit/parse.hpp"
#include "dicrit/report.hpp"

using namespace dicrit;

namespace {

struct CommonOpts {
    std::string field = "q";
    int max_depth = 64;
    int max_nodes = 4096;
    long precision = 24;
    bool strict = false;
    std::string json_path, svg_path, tikz_path;
    std::string special = "x", curve = "y";
    long node = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_vars) {
    cmd->add_option("--field", o.field, "ground field: q or fp:<p>");
    cmd->add_option("--max-depth", o.max_depth, "resolution depth budget");
    cmd->add_option("--max-nodes", o.max_nodes, "resolution node budget");
    cmd->add_option("--precision", o.precision, "weighted orders for Hensel lifting");
    cmd->add_flag("--strict", o.strict, "fail on branches whose roots leave the field");
    cmd->add_option("--json", o.json_path, "write the JSON report here ('-' for stdout)");
    cmd->add_option("--svg", o.svg_path, "write an SVG of the input Newton polygon");
    cmd->add_option("--tikz", o.tikz_path, "write a TikZ fragment of the input Newton polygon");
    if (with_vars) {
        cmd->add_option("--special", o.special, "name of the variable whose power carries T");
        cmd->add_option("--curve", o.curve, "name of the curve variable");
    }
}

void write_out(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

template <class Fn>
int with_field(const std::string& name, Fn&& fn) {
    if (name == "q") return fn(RationalField{});
    if (name.rfind("fp:", 0) == 0) return fn(PrimeField(static_cast<std::uint32_t>(std::stoul(name.substr(3)))));
    throw Error("unknown field: " + name + " (expected q or fp:<p>)");
}

ParseVars vars_of(const CommonOpts& o, bool allow_t) {
    if (o.special.size() != 1 || o.curve.size() != 1 || o.special == o.curve)
        throw Error("--special and --curve must be distinct single letters");
    return ParseVars{o.special[0], o.curve[0], allow_t};
}

template <class F>
void emit_renders(const CommonOpts& o, const PencilPoly<F>& p, long c) {
    if (o.svg_path.empty() && o.tikz_path.empty()) return;
    PolygonSketch sk = polygon_sketch(p, c, o.special[0], o.curve[0]);
    if (!o.svg_path.empty()) write_out(o.svg_path, render_polygon_svg(sk));
    if (!o.tikz_path.empty()) write_out(o.tikz_path, render_polygon_tikz(sk));
}

template <class F>
int run_pencil_analysis(const F& f, const CommonOpts& o, const SpecialPencil<F>& s, const std::string& input) {
    ResolveOptions ropts{o.max_depth, o.max_nodes, o.strict};
    auto tree = resolve(s, ropts);
    auto rep = aggregate_report(tree);
    if (!o.json_path.empty())
        write_out(o.json_path, pencil_report_json(f, input, tree, rep).dump(2) + "\n");
    else
        std::cout << pencil_report_text(f, tree, rep);
    emit_renders(o, s.P, s.c);
    return 0;
}

template <class F>
std::string series_to_string(const WeightedSeries<FractionField<F>>& w) {
    const auto& ff = w.field();
    std::string out;
    for (const auto& [k, v] : w.terms()) {
        std::string mono;
        if (k.first > 0) mono += "x" + std::string(k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y" + std::string(k.second > 1 ? "^" + std::to_string(k.second) : "");
        }
        std::string c = "(" + ff.str(v) + ")";
        std::string piece = mono.empty() ? c : c + "*" + mono;
        out += (out.empty() ? "" : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

int dispatch(CLI::App& app, const std::string& cmd, CommonOpts& o, std::string& expr_p, std::string& expr_u,
             long& c_in, long& d_in, bool& analyze_family) {
    (void)app;
    if (cmd == "analyze-local") {
        return with_field(o.field, [&](auto f) {
            auto vars = vars_of(o, false);
            auto p = parse_poly(f, expr_p, vars);
            auto u = expr_u.empty() ? PencilPoly<decltype(f)>::one(f) : parse_poly(f, expr_u, vars);
            auto s = make_pencil(p, c_in, u);
            return run_pencil_analysis(f, o, s, pencil_to_string(s.P, vars.xvar, vars.yvar));
        });
    }
    if (cmd == "analyze-pencil") {
        return with_field(o.field, [&](auto f) {
            auto vars = vars_of(o, true);
            auto P = parse_poly(f, expr_p, vars);
            auto s = pencil_from_poly(P);
            return run_pencil_analysis(f, o, s, pencil_to_string(s.P, vars.xvar, vars.yvar));
        });
    }
    if (cmd == "analyze-infinity") {
        return with_field(o.field, [&](auto f) {
            auto poly = parse_poly(f, expr_p, ParseVars{'x', 'y', false});
            ResolveOptions ropts{o.max_depth, o.max_nodes, o.strict};
            auto rep = infinity_report(poly, ropts);
            if (!o.json_path.empty())
                write_out(o.json_path, infinity_report_json(f, pencil_to_string(poly), rep).dump(2) + "\n");
            else
                std::cout << infinity_report_text(f, rep);
            return 0;
        });
    }
    if (cmd == "factor-edges") {
        return with_field(o.field, [&](auto f) {
            auto vars = vars_of(o, true);
            auto P = parse_poly(f, expr_p, vars);
            auto s = pencil_from_poly(P);
            auto fac = edge_factorization(s, o.precision);
            json j;
            j["field"] = f.name();
            j["input"] = pencil_to_string(s.P, vars.xvar, vars.yvar);
            j["complete_total_degree"] = fac.complete_totdeg;
            json jf = json::array();
            for (const auto& ef : fac.factors) {
                json e;
                e["edge"] = {{"n", ef.edge.n}, {"m", ef.edge.m}, {"omega", ef.edge.omega}, {"d", ef.edge.d}};
                e["factor"] = series_to_string<decltype(f)>(ef.factor);
                jf.push_back(e);
            }
            j["factors"] = jf;
            j["unit"] = series_to_string<decltype(f)>(fac.unit);
            std::string text = j.dump(2) + "\n";
            if (!o.json_path.empty())
                write_out(o.json_path, text);
            else
                std::cout << text;
            return 0;
        });
    }
    if (cmd == "gen-family") {
        return with_field(o.field, [&](auto f) {
            auto fam = extremal_family(f, d_in);
            if (analyze_family) {
                ResolveOptions ropts{o.max_depth, o.max_nodes, o.strict};
                auto rep = infinity_report(fam, ropts);
                if (!o.json_path.empty())
                    write_out(o.json_path, infinity_report_json(f, pencil_to_string(fam), rep).dump(2) + "\n");
                else
                    std::cout << infinity_report_text(f, rep);
            } else {
                std::cout << pencil_to_string(fam) << "\n";
            }
            return 0;
        });
    }
    if (cmd == "render") {
        return with_field(o.field, [&](auto f) {
            auto vars = vars_of(o, true);
            auto P = parse_poly(f, expr_p, vars);
            auto s = pencil_from_poly(P);
            if (o.svg_path.empty() && o.tikz_path.empty()) throw Error("render needs --svg or --tikz");
            if (o.node > 0) {
                ResolveOptions ropts{o.max_depth, o.max_nodes, o.strict};
                auto tree = resolve(s, ropts);
                if (o.node >= static_cast<long>(tree.nodes.size()))
                    throw Error("node id out of range; the tree has " + std::to_string(tree.nodes.size()) +
                                " nodes");
                const auto& node = tree.nodes[o.node];
                emit_renders(o, node.pencil.P, node.pencil.c);
                return 0;
            }
            emit_renders(o, s.P, s.c);
            return 0;
        });
    }
    throw Error("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact resolution of special pencils: Newton polygons, dicritical divisors, atypical values"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string expr_p, expr_u;
    long c_in = 1, d_in = 1;
    bool analyze_family = false;

    auto* local = app.add_subcommand("analyze-local", "resolve p(x,y) - T x^c U(x,y)");
    local->add_option("--p", expr_p, "numerator polynomial")->required();
    local->add_option("--c", c_in, "x-order of the denominator")->required();
    local->add_option("--U", expr_u, "unit cofactor (default 1)");
    add_common(local, o, true);

    auto* pencil_cmd = app.add_subcommand("analyze-pencil", "resolve a pencil given as P(x,y,T), affine in T");
    pencil_cmd->add_option("--P", expr_p, "pencil polynomial with T")->required();
    add_common(pencil_cmd, o, true);

    auto* inf = app.add_subcommand("analyze-infinity", "atypical values at infinity of f(x,y)");
    inf->add_option("--f", expr_p, "polynomial in x and y")->required();
    add_common(inf, o, false);

    auto* fact = app.add_subcommand("factor-edges", "Hensel factorization along the top-level edges");
    fact->add_option("--P", expr_p, "pencil polynomial with T")->required();
    add_common(fact, o, true);

    auto* fam = app.add_subcommand("gen-family", "generate the bound-attaining family member");
    fam->add_option("--d", d_in, "family parameter")->required();
    fam->add_flag("--analyze", analyze_family, "run the infinity pipeline on the family member");
    add_common(fam, o, false);

    auto* rend = app.add_subcommand("render", "draw the Newton polygon of a pencil");
    rend->add_option("--P", expr_p, "pencil polynomial with T")->required();
    rend->add_option("--node", o.node, "draw this node of the resolution tree instead of the root");
    add_common(rend, o, true);

    CLI11_PARSE(app, argc, argv);

    std::string cmd;
    for (auto* sc : app.get_subcommands()) cmd = sc->get_name();

    try {
        return dispatch(app, cmd, o, expr_p, expr_u, c_in, d_in, analyze_family);
    } catch (const NonSplitTopFormError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IrrationalBranchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DepthExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const NodeBudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
