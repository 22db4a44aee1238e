// Copyright 2026 The dicrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DICRIT_RESOLVER_HPP
#define DICRIT_RESOLVER_HPP

#include <optional>
#include <vector>

#include "dicrit/pencil.hpp"

namespace dicrit {

struct ResolveOptions {
    int max_depth = 64;
    int max_nodes = 4096;
    bool strict = false;  // fail on branches whose roots leave the ground field
};

enum class StepType { Root, Toric, Absorb };

// How a node was produced from its parent.
template <class F>
struct NodeStep {
    StepType type = StepType::Root;
    std::optional<ToricStep<F>> toric;
    std::optional<AbsorbStep<F>> absorb;
};

template <class F>
struct ResolutionNode {
    int id = 0;
    int parent = -1;
    int depth = 0;
    SpecialPencil<F> pencil;
    std::vector<Edge> polygon;
    NodeStep<F> step;
    std::vector<long> ratio_chain;  // v-ratios of the toric steps from the root
};

// One dicritical divisor: the edge polynomial normalized to the T-free map
// q_E = q0 / gamma with fiber equation q_E(z) = t.
template <class F>
struct DicriticalRecord {
    int id = 0;
    int node = 0;
    UniPoly<F> q_E;
    typename F::Elem gamma;
    long d_E = 0;
    long n_E = 0;
    long m_E = 0;
    typename F::Elem t0;
    std::vector<long> ratio_chain;
    int h = 0;  // steps from the root until the edge appeared
    bool residual_flag = false;
};

// A positive-degree factor of an edge polynomial with no roots in K; the
// branches below it are not followed.
template <class F>
struct ResidualRecord {
    int node = 0;
    Edge edge;
    UniPoly<F> residual;
};

template <class F>
struct ResolutionTree {
    std::vector<ResolutionNode<F>> nodes;
    std::vector<DicriticalRecord<F>> dicriticals;
    std::vector<ResidualRecord<F>> residuals;
    long root_y_order = 0;

    bool has_residuals() const { return !residuals.empty(); }
};

// Depth-first toric-Newton process. Dicritical edges become records;
// an absorbable first edge is rewritten in place (one child, budget
// consumed); ordinary edges spawn one child per root of q0 in K, in
// canonical root order.
template <class F>
ResolutionTree<F> resolve(const SpecialPencil<F>& s, const ResolveOptions& opts = {}) {
    ResolutionTree<F> tree;
    tree.root_y_order = s.y_order;

    struct Job {
        SpecialPencil<F> pencil;
        int parent;
        int depth;
        NodeStep<F> step;
        std::vector<long> chain;
    };
    std::vector<Job> stack;
    stack.push_back(Job{s, -1, 0, NodeStep<F>{}, {}});

    while (!stack.empty()) {
        Job job = std::move(stack.back());
        stack.pop_back();
        if (job.depth > opts.max_depth) throw DepthExceededError(opts.max_depth);
        if (static_cast<int>(tree.nodes.size()) >= opts.max_nodes) throw NodeBudgetExceededError(opts.max_nodes);

        int node_id = static_cast<int>(tree.nodes.size());
        ResolutionNode<F> node{node_id,  job.parent, job.depth, job.pencil, newton_polygon(job.pencil.P),
                               job.step, job.chain};

        int dicritical_edges = 0;
        for (const Edge& e : node.polygon)
            if (e.kind == EdgeKind::Dicritical) ++dicritical_edges;
        if (dicritical_edges > 1) throw Error("polygon with more than one dicritical edge");

        // an absorbable first edge rewrites the whole pencil; the other edges
        // reappear in the rewritten child
        if (!node.polygon.empty() && node.polygon.front().kind == EdgeKind::Absorbable) {
            auto [child, st] = absorb_translation(job.pencil, node.polygon.front());
            NodeStep<F> cstep;
            cstep.type = StepType::Absorb;
            cstep.absorb = st;
            tree.nodes.push_back(std::move(node));
            stack.push_back(Job{child, node_id, job.depth + 1, cstep, job.chain});
            continue;
        }

        std::vector<Job> children;
        for (const Edge& e : node.polygon) {
            if (e.kind == EdgeKind::Dicritical) {
                EdgeSupport<F> sup = edge_data(job.pencil.P, e);
                const F& f = job.pencil.P.field();
                UniPoly<F> qE = sup.q0.scaled(f.inv(sup.gamma)).with_var("z");
                if (qE.degree() != e.d) throw Error("dicritical edge polynomial degree mismatch");
                DicriticalRecord<F> rec{static_cast<int>(tree.dicriticals.size()),
                                        node_id,
                                        qE,
                                        sup.gamma,
                                        e.d,
                                        e.n,
                                        e.m,
                                        qE.eval(f.zero()),
                                        job.chain,
                                        job.depth,
                                        false};
                tree.dicriticals.push_back(std::move(rec));
                continue;
            }
            // ordinary edge: one child per root in K
            EdgeSupport<F> sup = edge_data(job.pencil.P, e);
            auto roots = rational_roots(sup.q0);
            if (roots.residual.degree() > 0) {
                if (opts.strict)
                    throw IrrationalBranchError("edge polynomial has a factor with no roots in " +
                                                job.pencil.P.field().name() + ": " + roots.residual.to_string());
                tree.residuals.push_back(ResidualRecord<F>{node_id, e, roots.residual});
            }
            for (const auto& [alpha, mult] : roots.roots) {
                auto [child, st] = toric_newton_child(job.pencil, e, alpha, mult);
                NodeStep<F> cstep;
                cstep.type = StepType::Toric;
                cstep.toric = st;
                std::vector<long> chain = job.chain;
                chain.push_back(e.n);
                children.push_back(Job{child, node_id, job.depth + 1, cstep, std::move(chain)});
            }
        }
        tree.nodes.push_back(std::move(node));
        // keep canonical order under DFS: push children in reverse
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    }

    if (tree.has_residuals())
        for (auto& rec : tree.dicriticals) rec.residual_flag = true;

    // conservation: every unit of the root y-order is accounted for by a
    // dicritical or by an unfollowed residual factor
    long total = 0;
    for (const auto& rec : tree.dicriticals) {
        long d = rec.d_E * rec.n_E;
        for (long n : rec.ratio_chain) d *= n;
        total += d;
    }
    for (const auto& res : tree.residuals) {
        long d = res.residual.degree() * res.edge.n;
        for (long n : tree.nodes[res.node].ratio_chain) d *= n;
        total += d;
    }
    if (total != tree.root_y_order) throw Error("resolution lost branches: degree bookkeeping mismatch");
    return tree;
}

struct DegreeIdentity {
    long lhs = 0;  // y-order of the root pencil
    long rhs = 0;  // sum of d_E * n_E * prod(chain)
    bool ok = false;
    std::vector<long> per_dicritical;
};

// d = sum over dicriticals of d_E * n_E * prod of the v-ratios along the
// path. Requires a fully resolved tree with no residual branches.
template <class F>
DegreeIdentity degree_identity(const ResolutionTree<F>& tree) {
    if (tree.has_residuals()) throw ResidualPresentError();
    DegreeIdentity out;
    out.lhs = tree.root_y_order;
    for (const auto& rec : tree.dicriticals) {
        long d = rec.d_E * rec.n_E;
        for (long n : rec.ratio_chain) d *= n;
        out.per_dicritical.push_back(d);
        out.rhs += d;
    }
    out.ok = (out.lhs == out.rhs);
    return out;
}

}  // namespace dicrit

#endif
