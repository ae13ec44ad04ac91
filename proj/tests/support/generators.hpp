#pragma once

// Seeded random inputs for property tests. Everything is driven by an
// explicit mt19937_64 so failures reproduce exactly.

#include <random>
#include <string>
#include <vector>

#include "nashgate/graph.hpp"
#include "nashgate/lattice.hpp"

namespace testgen {

struct graph_options {
    std::size_t min_components = 1;
    std::size_t max_components = 8;
    long long self_min = -5;
    long long self_max = -1;
    long long max_mult = 2;
    std::size_t max_extra_edges = 2;
    long long max_genus = 0;
    long long max_mu = 0;
    long long max_eta = 0;
    long long max_nu_extra = 0;
};

inline nashgate::dual_graph random_connected_graph(std::mt19937_64& rng,
                                                   const graph_options& opt,
                                                   const std::string& name = "random") {
    std::uniform_int_distribution<std::size_t> size_dist(opt.min_components,
                                                         opt.max_components);
    const std::size_t n = size_dist(rng);
    std::uniform_int_distribution<long long> self_dist(opt.self_min, opt.self_max);
    std::uniform_int_distribution<long long> mult_dist(1, opt.max_mult);
    std::uniform_int_distribution<long long> genus_dist(0, opt.max_genus);
    std::uniform_int_distribution<long long> mu_dist(0, opt.max_mu);
    std::uniform_int_distribution<long long> eta_dist(0, opt.max_eta);
    std::uniform_int_distribution<long long> nu_dist(0, opt.max_nu_extra);

    std::vector<nashgate::component> comps;
    for (std::size_t i = 0; i < n; ++i)
        comps.push_back({"E" + std::to_string(i + 1), self_dist(rng), genus_dist(rng),
                         mu_dist(rng), eta_dist(rng), nu_dist(rng)});

    std::vector<nashgate::graph_edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> parent_dist(0, i - 1);
        edges.push_back({parent_dist(rng), i, mult_dist(rng)});
    }
    if (n >= 2 && opt.max_extra_edges > 0) {
        std::uniform_int_distribution<std::size_t> extra_dist(0, opt.max_extra_edges);
        std::uniform_int_distribution<std::size_t> node_dist(0, n - 1);
        const std::size_t extra = extra_dist(rng);
        for (std::size_t k = 0; k < extra; ++k) {
            std::size_t a = node_dist(rng), b = node_dist(rng);
            if (a != b) edges.push_back({a, b, mult_dist(rng)});
        }
    }
    return nashgate::make_graph(name, std::move(comps), std::move(edges));
}

// Rejection-samples until the intersection matrix passes the exact
// Sylvester test. Biased towards self-intersections <= -2 so the loop
// terminates quickly.
inline nashgate::dual_graph random_negative_definite_graph(std::mt19937_64& rng,
                                                           graph_options opt,
                                                           const std::string& name = "random") {
    if (opt.self_max > -1) opt.self_max = -1;
    for (int tries = 0; tries < 20000; ++tries) {
        auto g = random_connected_graph(rng, opt, name);
        bool has_deep = false;
        for (const auto& c : g.components)
            if (c.self_int <= -2) has_deep = true;
        if (!has_deep && g.components.size() > 1) continue;
        if (nashgate::is_negative_definite(nashgate::intersection_matrix(g)).negative_definite)
            return g;
    }
    throw std::runtime_error("could not sample a negative definite graph");
}

inline std::vector<long long> random_support(std::mt19937_64& rng, std::size_t n,
                                             std::size_t target, long long max_coeff = 5) {
    std::uniform_int_distribution<long long> coeff_dist(0, max_coeff);
    std::vector<long long> a(n, 0);
    for (std::size_t i = 0; i < n; ++i) a[i] = coeff_dist(rng);
    if (a[target] < 1) a[target] = 1;
    return a;
}

}  // namespace testgen
