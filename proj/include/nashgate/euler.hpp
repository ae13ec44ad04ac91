#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/graph.hpp"
#include "nashgate/lattice.hpp"

namespace nashgate {

// Topology of the reduced limit divisor for a given exceptional support.
// For a supported component (a_i != 0):
//   nu_i  = sum over supported neighbours j of k_{i,j}, plus one for the
//           strict-transform attachment when i is the target, plus any
//           declared extra branches at the component's own singular points;
//   chi_dot_i = 2 - 2 g_i - nu_i   (Euler characteristic of the punctured curve).
// A component outside the support has no branches on the limit divisor, so
// nu_i = 0 and chi_dot_i = 2 - 2 g_i.
struct support_topology {
    std::vector<long long> nu;
    std::vector<long long> chi_dot;
    std::vector<int> delta;  // 1 iff a_i != 0
};

namespace detail {

inline void check_support_args(const dual_graph& g, std::size_t target,
                               const std::vector<long long>& a) {
    if (target >= g.components.size())
        throw error(errc::invalid_argument, "target index out of range");
    if (a.size() != g.components.size())
        throw error(errc::dimension_mismatch,
                    "coefficient vector length must match component count");
    for (long long v : a)
        if (v < 0) throw error(errc::invalid_argument, "coefficients must be non-negative");
    if (a[target] < 1)
        throw error(errc::invalid_argument,
                    "target coefficient must be positive (the target carries the strict "
                    "transform)");
}

inline long long supported_neighbour_mass(const dual_graph& g, const std::vector<long long>& a,
                                          std::size_t i) {
    long long total = 0;
    for (const auto& e : g.edges) {
        if (e.i == i && a[e.j] != 0) total += e.mult;
        if (e.j == i && a[e.i] != 0) total += e.mult;
    }
    return total;
}

}  // namespace detail

inline support_topology compute_support_topology(const dual_graph& g, std::size_t target,
                                                 const std::vector<long long>& a) {
    detail::check_support_args(g, target, a);
    const std::size_t n = g.components.size();
    support_topology st;
    st.nu.resize(n, 0);
    st.chi_dot.resize(n, 0);
    st.delta.resize(n, 0);
    for (std::size_t i = 0; i < n; ++i) st.delta[i] = a[i] != 0 ? 1 : 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != 0) {
            st.nu[i] = detail::supported_neighbour_mass(g, a, i) +
                       (i == target ? 1 : 0) + g.components[i].nu_extra;
        }
        st.chi_dot[i] = 2 - 2 * g.components[i].genus - st.nu[i];
    }
    return st;
}

// theta_i = nu_i - mu_i - eta_i - (supported neighbour mass) - [i == target].
inline long long theta_term(const dual_graph& g, std::size_t target,
                            const std::vector<long long>& a, std::size_t i) {
    detail::check_support_args(g, target, a);
    if (i >= g.components.size())
        throw error(errc::invalid_argument, "component index out of range");
    auto st = compute_support_topology(g, target, a);
    return st.nu[i] - g.components[i].mu - g.components[i].eta -
           detail::supported_neighbour_mass(g, a, i) - (i == target ? 1 : 0);
}

// Substituted upper bound for the total contact of the generic member with
// the reduced limit divisor: sum_i a_i (sum_j delta_j k_{i,j}) + 1.
// The inner sum runs over all j including i itself.
inline long long returns_bound(const dual_graph& g, std::size_t target,
                               const std::vector<long long>& a) {
    detail::check_support_args(g, target, a);
    long long total = 0;
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        if (a[i] == 0) continue;
        long long row = g.components[i].self_int;  // delta_i = 1 here
        row += detail::supported_neighbour_mass(g, a, i);
        total += a[i] * row;
    }
    return total + 1;
}

// Disc-count refinement: a_target - 1 + sum_i a_i (chi_dot_i + theta_i)
// plus the supplied contact term. The contact term is either the
// substituted bound above or sum_j delta_j b_j for an explicit return
// vector; no system-consistency between a and b is checked here.
inline long long refined_bound(const dual_graph& g, std::size_t target,
                               const std::vector<long long>& a, long long returns_term) {
    detail::check_support_args(g, target, a);
    auto st = compute_support_topology(g, target, a);
    long long total = a[target] - 1;
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        if (a[i] == 0) continue;
        long long theta = st.nu[i] - g.components[i].mu - g.components[i].eta -
                          detail::supported_neighbour_mass(g, a, i) - (i == target ? 1 : 0);
        total += a[i] * (st.chi_dot[i] + theta);
    }
    return total + returns_term;
}

// Per-component term of the closed-form bound: t_i = 2 - 2g_i - mu_i -
// eta_i + k_{i,i}. The closed form of the refined bound is sum_i a_i t_i.
inline std::vector<long long> final_bound_terms(const dual_graph& g) {
    std::vector<long long> terms;
    terms.reserve(g.components.size());
    for (const auto& c : g.components)
        terms.push_back(2 - 2 * c.genus - c.mu - c.eta + c.self_int);
    return terms;
}

inline long long final_bound(const dual_graph& g, const std::vector<long long>& a) {
    if (a.size() != g.components.size())
        throw error(errc::dimension_mismatch,
                    "coefficient vector length must match component count");
    for (long long v : a)
        if (v < 0) throw error(errc::invalid_argument, "coefficients must be non-negative");
    auto terms = final_bound_terms(g);
    long long total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * terms[i];
    return total;
}

// Full bound evaluation for one support vector.
struct bound_report {
    std::vector<long long> a;
    support_topology support;
    std::vector<long long> theta;
    long long returns_term = 0;
    long long refined = 0;
    std::vector<long long> terms;
    long long final_value = 0;
    bool impossible_wedge = false;  // final bound < 1, the Euler characteristic of a disc
};

inline bound_report evaluate_bounds(const dual_graph& g, std::size_t target,
                                    const std::vector<long long>& a) {
    detail::check_support_args(g, target, a);
    bound_report r;
    r.a = a;
    r.support = compute_support_topology(g, target, a);
    r.theta.resize(g.components.size());
    for (std::size_t i = 0; i < g.components.size(); ++i)
        r.theta[i] = r.support.nu[i] - g.components[i].mu - g.components[i].eta -
                     detail::supported_neighbour_mass(g, a, i) - (i == target ? 1 : 0);
    r.returns_term = returns_bound(g, target, a);
    r.refined = refined_bound(g, target, a, r.returns_term);
    r.terms = final_bound_terms(g);
    r.final_value = final_bound(g, a);
    r.impossible_wedge = r.final_value < 1;
    return r;
}

enum class certificate_failure {
    not_negative_definite,
    non_minimal,
    positive_component_term,
};

constexpr std::string_view certificate_failure_name(certificate_failure f) {
    switch (f) {
        case certificate_failure::not_negative_definite: return "NOT_NEGATIVE_DEFINITE";
        case certificate_failure::non_minimal: return "NON_MINIMAL";
        case certificate_failure::positive_component_term: return "POSITIVE_COMPONENT_TERM";
    }
    return "NOT_NEGATIVE_DEFINITE";
}

// Graph-level obstruction certificate: issued iff the graph is negative
// definite, passes the minimality audit, and every component term t_i is
// non-positive. Under these hypotheses every candidate limit divisor with
// non-negative integral coefficients and positive target coefficient obeys
// final bound <= 0 < 1, so no candidate wedge survives.
struct graph_certificate {
    std::string graph_name;
    bool negative_definite = false;
    bool minimal = false;
    std::vector<long long> terms;
    std::vector<std::size_t> minimality_violations;
    std::vector<certificate_failure> failures;
    bool issued = false;
};

inline graph_certificate certificate(const dual_graph& g) {
    graph_certificate cert;
    cert.graph_name = g.name;
    cert.negative_definite = is_negative_definite(intersection_matrix(g)).negative_definite;
    cert.minimality_violations = minimality_audit(g);
    cert.minimal = cert.minimality_violations.empty();
    cert.terms = final_bound_terms(g);
    bool all_nonpositive = true;
    for (long long t : cert.terms)
        if (t > 0) all_nonpositive = false;
    if (!cert.negative_definite)
        cert.failures.push_back(certificate_failure::not_negative_definite);
    if (!cert.minimal) cert.failures.push_back(certificate_failure::non_minimal);
    if (!all_nonpositive)
        cert.failures.push_back(certificate_failure::positive_component_term);
    cert.issued = cert.failures.empty();
    return cert;
}

// Normal-crossings Euler-characteristic bound, as a pure formula:
// sum_i c_i chi_dot(Z_i) + sum_i a_i chi_dot(E_i) + contact.
inline long long nc_global_bound(std::span<const long long> c,
                                 std::span<const long long> chi_dot_z,
                                 std::span<const long long> a,
                                 std::span<const long long> chi_dot_e, long long contact) {
    if (c.size() != chi_dot_z.size() || a.size() != chi_dot_e.size())
        throw error(errc::dimension_mismatch,
                    "multiplicity and chi vectors must have matching lengths");
    if (contact < 0) throw error(errc::invalid_argument, "contact term must be non-negative");
    long long total = contact;
    for (std::size_t i = 0; i < c.size(); ++i) total += c[i] * chi_dot_z[i];
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * chi_dot_e[i];
    return total;
}

}  // namespace nashgate
