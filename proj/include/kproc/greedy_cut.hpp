#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kproc/partition.hpp"
#include "kproc/rng.hpp"

namespace kproc {

struct WeightedEdge {
    Vertex u, v;
    double w;
    bool operator==(const WeightedEdge&) const = default;
};

struct WeightedGraph {
    Vertex n = 0;
    std::vector<WeightedEdge> edges;  // u < v, no duplicates, w >= 0
};

inline void validate_graph(const WeightedGraph& g) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : g.edges) {
        if (e.u >= e.v || e.v >= g.n) throw std::invalid_argument("edge endpoints must satisfy u < v < n");
        if (e.w < 0) throw std::invalid_argument("edge weights must be nonnegative");
        if (!seen.emplace(e.u, e.v).second) throw std::invalid_argument("duplicate edge");
    }
}

inline void validate_terminals(const WeightedGraph& g, const std::vector<Vertex>& terminals) {
    if (terminals.size() < 2) throw std::invalid_argument("need at least 2 terminals");
    std::set<Vertex> seen;
    for (Vertex t : terminals) {
        if (t >= g.n) throw std::invalid_argument("terminal out of range");
        if (!seen.insert(t).second) throw std::invalid_argument("duplicate terminal");
    }
}

struct CutResult {
    std::vector<std::size_t> retained;  // indices into edges, in processing order
    std::vector<std::size_t> removed;   // the set R
    double retained_weight = 0;
    double removed_weight = 0;
    std::vector<Vertex> component_of;   // canonical component label per vertex
};

// Process edges by decreasing weight (ties shuffled by seed); keep an edge
// unless it would connect two terminals' components.
inline CutResult edge_first_greedy(const WeightedGraph& g, const std::vector<Vertex>& terminals,
                                   std::uint64_t seed) {
    validate_graph(g);
    validate_terminals(g, terminals);
    std::vector<std::size_t> order(g.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    SplitMix64 rng(seed);
    shuffle_in_place(order, rng);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.edges[a].w > g.edges[b].w;
    });

    Partition part(g.n, terminals);
    CutResult res;
    for (std::size_t idx : order) {
        const auto& e = g.edges[idx];
        if (part.try_union_kprocess(e.u, e.v) == MergeOutcome::Collision) {
            res.removed.push_back(idx);
            res.removed_weight += e.w;
        } else {
            res.retained.push_back(idx);
            res.retained_weight += e.w;
        }
    }
    res.component_of.resize(g.n);
    for (Vertex v = 0; v < g.n; ++v) res.component_of[v] = part.find(v);
    return res;
}

struct OracleResult {
    double removed_weight = 0;
    std::vector<std::size_t> removed;  // one optimal witness
};

// Exact multiway cut by enumerating terminal labelings of the non-terminal
// vertices. Any valid cut induces such a labeling and the cross-label edges
// of any labeling form a valid cut, so the minimum over labelings is the
// optimum.
inline OracleResult brute_force_multiway_cut(const WeightedGraph& g,
                                             const std::vector<Vertex>& terminals) {
    validate_graph(g);
    validate_terminals(g, terminals);
    const std::size_t t = terminals.size();
    std::vector<Vertex> free_vertices;
    std::vector<std::size_t> label(g.n, 0);
    std::vector<bool> is_terminal(g.n, false);
    for (std::size_t i = 0; i < t; ++i) {
        is_terminal[terminals[i]] = true;
        label[terminals[i]] = i;
    }
    for (Vertex v = 0; v < g.n; ++v)
        if (!is_terminal[v]) free_vertices.push_back(v);

    double combos = std::pow(static_cast<double>(t), static_cast<double>(free_vertices.size()));
    if (combos > 1e7) throw std::invalid_argument("instance too large for exact oracle");

    OracleResult best;
    best.removed_weight = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> assignment(free_vertices.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < free_vertices.size(); ++i) label[free_vertices[i]] = assignment[i];
        double cut = 0;
        for (const auto& e : g.edges)
            if (label[e.u] != label[e.v]) cut += e.w;
        if (cut < best.removed_weight) {
            best.removed_weight = cut;
            best.removed.clear();
            for (std::size_t i = 0; i < g.edges.size(); ++i)
                if (label[g.edges[i].u] != label[g.edges[i].v]) best.removed.push_back(i);
        }
        std::size_t pos = 0;
        while (pos < assignment.size() && ++assignment[pos] == t) assignment[pos++] = 0;
        if (pos == assignment.size()) break;
    }
    return best;
}

// Adversarial instance: K_{n^2} on vertices v_{i,j}, weight 1+eps when the
// column indices match and 1 otherwise; terminals are the first row.
inline std::pair<WeightedGraph, std::vector<Vertex>> build_example_graph(Vertex n, double eps) {
    if (n < 2 || eps <= 0) throw std::invalid_argument("example graph needs n >= 2, eps > 0");
    WeightedGraph g;
    g.n = n * n;
    auto id = [n](Vertex row, Vertex col) { return row * n + col; };
    for (Vertex a = 0; a < g.n; ++a)
        for (Vertex b = a + 1; b < g.n; ++b) {
            bool same_col = (a % n) == (b % n);
            g.edges.push_back({a, b, same_col ? 1.0 + eps : 1.0});
        }
    std::vector<Vertex> terminals;
    for (Vertex col = 0; col < n; ++col) terminals.push_back(id(0, col));
    return {std::move(g), std::move(terminals)};
}

inline double total_weight(const WeightedGraph& g) {
    double w = 0;
    for (const auto& e : g.edges) w += e.w;
    return w;
}

}  // namespace kproc
