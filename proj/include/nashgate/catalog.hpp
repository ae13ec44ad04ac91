#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/embedded.hpp"
#include "nashgate/format.hpp"
#include "nashgate/graph.hpp"

namespace nashgate {

namespace detail {

inline std::vector<component> minus_two_chain(std::size_t n) {
    std::vector<component> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        comps.push_back({"E" + std::to_string(i + 1), -2, 0, 0, 0, 0});
    return comps;
}

inline std::vector<graph_edge> chain_edges(std::size_t n) {
    std::vector<graph_edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return edges;
}

inline dual_graph make_A(std::size_t n) {
    return make_graph("A" + std::to_string(n), minus_two_chain(n), chain_edges(n));
}

// D_n: fork at one end; E1, E2 both attach to E3, then a chain E3..En.
inline dual_graph make_D(std::size_t n) {
    std::vector<graph_edge> edges{{0, 2, 1}, {1, 2, 1}};
    for (std::size_t i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return make_graph("D" + std::to_string(n), minus_two_chain(n), edges);
}

// E_n: chain of n-1 with one extra node attached so the arms from the
// trivalent node have lengths n-4, 2, 1.
inline dual_graph make_E(std::size_t n) {
    auto edges = chain_edges(n - 1);
    edges.push_back({n - 4, n - 1, 1});
    return make_graph("E" + std::to_string(n), minus_two_chain(n), edges);
}

inline embedded_resolution make_embedded(std::string name, std::vector<component> comps,
                                         std::vector<graph_edge> edges,
                                         std::vector<strict_transform> branches,
                                         std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                                                               long long>>
                                             pairwise) {
    embedded_resolution d;
    d.exceptional = make_graph(std::move(name), std::move(comps), std::move(edges));
    d.branches = std::move(branches);
    for (auto& [key, v] : pairwise) d.pairwise[key] = v;
    validate_embedded(d);
    return d;
}

}  // namespace detail

// Minimal embedded resolution of the cuspidal cubic x^2 - y^3: three point
// blowups; the strict transform meets the last (-1)-curve transversely.
inline embedded_resolution catalog_cusp_embedded() {
    return detail::make_embedded(
        "cusp-embedded",
        {{"E1", -3, 0, 0, 0, 0}, {"E2", -2, 0, 0, 0, 0}, {"E3", -1, 0, 0, 0, 0}},
        {{0, 2, 1}, {1, 2, 1}},
        {{"Z1", 1, {{2, 1}}, 2}},
        {});
}

// One blowup of the node xy = 0: both smooth branches separate onto E1.
inline embedded_resolution catalog_node_embedded() {
    return detail::make_embedded(
        "node-embedded", {{"E1", -1, 0, 0, 0, 0}}, {},
        {{"Z1", 1, {{0, 1}}, 0}, {"Z2", 1, {{0, 1}}, 0}},
        {{{0, 1}, 1}});
}

// Two blowups of the tacnode x^2 - y^4: the second separates the two
// smooth branches, which meet at the origin with contact 2.
inline embedded_resolution catalog_tacnode_embedded() {
    return detail::make_embedded(
        "tacnode-embedded", {{"E1", -2, 0, 0, 0, 0}, {"E2", -1, 0, 0, 0, 0}},
        {{0, 1, 1}},
        {{"Z1", 1, {{1, 1}}, 0}, {"Z2", 1, {{1, 1}}, 0}},
        {{{0, 1}, 2}});
}

// Minimal embedded resolution of x^3 - y^4 (one branch, Milnor number 6):
// four blowups, total-transform multiplicities (3, 4, 8, 12).
inline embedded_resolution catalog_e6_curve_embedded() {
    return detail::make_embedded(
        "e6-curve-embedded",
        {{"E1", -4, 0, 0, 0, 0},
         {"E2", -2, 0, 0, 0, 0},
         {"E3", -2, 0, 0, 0, 0},
         {"E4", -1, 0, 0, 0, 0}},
        {{0, 3, 1}, {1, 2, 1}, {2, 3, 1}},
        {{"Z1", 1, {{3, 1}}, 6}},
        {});
}

// One blowup of an ordinary triple point (three pairwise transverse lines).
inline embedded_resolution catalog_triple_point_embedded() {
    return detail::make_embedded(
        "triple-point-embedded", {{"E1", -1, 0, 0, 0, 0}}, {},
        {{"Z1", 1, {{0, 1}}, 0}, {"Z2", 1, {{0, 1}}, 0}, {"Z3", 1, {{0, 1}}, 0}},
        {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}});
}

// One blowup of a smooth germ; the Milnor fibre stays a disc.
inline embedded_resolution catalog_smooth_branch_embedded() {
    return detail::make_embedded(
        "smooth-branch-embedded", {{"E1", -1, 0, 0, 0, 0}}, {},
        {{"Z1", 1, {{0, 1}}, 0}},
        {});
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8",
        "D4", "D5", "D6", "D7", "D8",
        "E6", "E7", "E8",
        "nonminimal-demo", "indefinite-demo",
        "cusp-embedded", "node-embedded", "tacnode-embedded",
        "e6-curve-embedded", "triple-point-embedded", "smooth-branch-embedded",
    };
    return names;
}

inline document catalog_lookup(std::string_view name) {
    if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '8')
        return detail::make_A(static_cast<std::size_t>(name[1] - '0'));
    if (name.size() == 2 && name[0] == 'D' && name[1] >= '4' && name[1] <= '8')
        return detail::make_D(static_cast<std::size_t>(name[1] - '0'));
    if (name.size() == 2 && name[0] == 'E' && name[1] >= '6' && name[1] <= '8')
        return detail::make_E(static_cast<std::size_t>(name[1] - '0'));
    if (name == "nonminimal-demo")
        return make_graph("nonminimal-demo", {{"E1", -1, 0, 0, 0, 0}}, {});
    if (name == "indefinite-demo")
        return make_graph("indefinite-demo", {{"E1", 0, 0, 0, 0, 0}}, {});
    if (name == "cusp-embedded") return catalog_cusp_embedded();
    if (name == "node-embedded") return catalog_node_embedded();
    if (name == "tacnode-embedded") return catalog_tacnode_embedded();
    if (name == "e6-curve-embedded") return catalog_e6_curve_embedded();
    if (name == "triple-point-embedded") return catalog_triple_point_embedded();
    if (name == "smooth-branch-embedded") return catalog_smooth_branch_embedded();
    throw error(errc::unknown_catalog_name,
                "no catalog entry named '" + std::string(name) + "'");
}

}  // namespace nashgate
