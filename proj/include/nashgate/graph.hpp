#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/matrix.hpp"

namespace nashgate {

// One irreducible exceptional curve. genus is the genus of the
// normalization; mu/eta/nu_extra are aggregate invariants of the
// component's own singular points (all zero for a smooth component).
struct component {
    std::string id;
    long long self_int = 0;  // k_{i,i}
    long long genus = 0;
    long long mu = 0;
    long long eta = 0;
    long long nu_extra = 0;

    bool operator==(const component&) const = default;
};

// Unordered edge between distinct components; mult >= 1. Parallel edges
// are stored merged, with i < j and the list sorted by (i, j).
struct graph_edge {
    std::size_t i = 0;
    std::size_t j = 0;
    long long mult = 1;

    bool operator==(const graph_edge&) const = default;
};

// Weighted dual graph of a resolution. Component order is declaration
// order and fixes the indexing of every vector and matrix derived from it.
struct dual_graph {
    std::string name;
    std::vector<component> components;
    std::vector<graph_edge> edges;
    std::optional<std::size_t> arc_target;  // default target for scans

    bool operator==(const dual_graph&) const = default;

    std::optional<std::size_t> index_of(std::string_view id) const {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].id == id) return i;
        return std::nullopt;
    }

    long long pair_mult(std::size_t a, std::size_t b) const {
        for (const auto& e : edges)
            if ((e.i == a && e.j == b) || (e.i == b && e.j == a)) return e.mult;
        return 0;
    }
};

namespace detail {

inline void canonicalize_edges(std::vector<graph_edge>& edges) {
    for (auto& e : edges)
        if (e.i > e.j) std::swap(e.i, e.j);
    std::map<std::pair<std::size_t, std::size_t>, long long> merged;
    for (const auto& e : edges) merged[{e.i, e.j}] += e.mult;
    edges.clear();
    for (const auto& [key, mult] : merged) edges.push_back({key.first, key.second, mult});
}

inline bool is_connected(std::size_t n, const std::vector<graph_edge>& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

}  // namespace detail

// Checked constructor for programmatic graphs (catalog, tests). Enforces
// the same invariants the parser does, minus source positions.
inline dual_graph make_graph(std::string name, std::vector<component> components,
                             std::vector<graph_edge> edges,
                             std::optional<std::size_t> arc_target = std::nullopt) {
    dual_graph g;
    g.name = std::move(name);
    g.components = std::move(components);
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        const auto& c = g.components[i];
        if (c.genus < 0 || c.mu < 0 || c.eta < 0 || c.nu_extra < 0)
            throw error(errc::invalid_argument,
                        "component '" + c.id + "' has a negative invariant");
        for (std::size_t j = i + 1; j < g.components.size(); ++j)
            if (g.components[j].id == c.id)
                throw error(errc::duplicate_component, "duplicate component id '" + c.id + "'");
    }
    for (const auto& e : edges) {
        if (e.i >= g.components.size() || e.j >= g.components.size())
            throw error(errc::unknown_component, "edge endpoint out of range");
        if (e.i == e.j)
            throw error(errc::self_edge,
                        "self-edge on component '" + g.components[e.i].id + "'");
        if (e.mult < 1)
            throw error(errc::negative_multiplicity, "edge multiplicity must be positive");
    }
    detail::canonicalize_edges(edges);
    g.edges = std::move(edges);
    if (!detail::is_connected(g.components.size(), g.edges))
        throw error(errc::disconnected, "graph '" + g.name + "' is not connected");
    if (arc_target && *arc_target >= g.components.size())
        throw error(errc::unknown_component, "arc target out of range");
    g.arc_target = arc_target;
    return g;
}

// Intersection matrix M: diagonal from self-intersections, off-diagonal
// from merged edge multiplicities. Always symmetric with non-negative
// off-diagonal entries.
inline matrix<big_int> intersection_matrix(const dual_graph& g) {
    const std::size_t n = g.components.size();
    matrix<big_int> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = g.components[i].self_int;
    for (const auto& e : g.edges) {
        m(e.i, e.j) = e.mult;
        m(e.j, e.i) = e.mult;
    }
    return m;
}

}  // namespace nashgate
