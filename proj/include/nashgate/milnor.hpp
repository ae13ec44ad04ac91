#pragma once

#include <cstddef>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/embedded.hpp"
#include "nashgate/exact.hpp"
#include "nashgate/lattice.hpp"
#include "nashgate/matrix.hpp"

namespace nashgate {

// Exceptional multiplicities of the total transform of the curve: the
// unique solution of V . E_k = 0 for every exceptional k, i.e.
//   sum_i a_i k_{i,k} + sum_b c_b (Z_b . E_k) = 0.
// Genuine embedded-resolution data always yields positive integers.
struct total_transform {
    std::vector<big_int> a;
};

inline total_transform compute_total_transform(const embedded_resolution& d) {
    validate_embedded(d);
    auto m = intersection_matrix(d.exceptional);
    if (!is_negative_definite(m).negative_definite)
        throw error(errc::not_negative_definite,
                    "exceptional configuration is not negative definite");
    auto inv = invert_integer_matrix(m);
    if (!inv) throw error(errc::singular, "exceptional intersection matrix is singular");

    const std::size_t n = d.exceptional.components.size();
    std::vector<big_int> rhs(n, big_int(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t b = 0; b < d.branches.size(); ++b)
            rhs[k] -= big_int(d.branches[b].mult) * d.attach_mult(b, k);

    auto a = inv->solve(rhs);
    total_transform tt;
    tt.a.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_integer(a[i]) || a[i] < 1)
            throw error(errc::non_integral_total_transform,
                        "total transform multiplicity for '" +
                            d.exceptional.components[i].id +
                            "' is not a positive integer (" + a[i].str() +
                            "); input is not a consistent embedded resolution");
        tt.a.push_back(rat_num(a[i]));
    }
    return tt;
}

// Euler characteristic of the Milnor fibre from the resolution side:
// chi = sum_i a_i (2 - nu_i), where nu_i counts the intersection points of
// E_i with the other components of the total transform (each attachment
// weighted by its intersection number).
inline long long chi_from_resolution(const embedded_resolution& d) {
    auto tt = compute_total_transform(d);
    const std::size_t n = d.exceptional.components.size();
    big_int chi(0);
    for (std::size_t i = 0; i < n; ++i) {
        long long nu = 0;
        for (const auto& e : d.exceptional.edges) {
            if (e.i == i) nu += e.mult;
            if (e.j == i) nu += e.mult;
        }
        for (std::size_t b = 0; b < d.branches.size(); ++b) nu += d.attach_mult(b, i);
        chi += tt.a[i] * (2 - nu);
    }
    return to_ll(chi);
}

// Euler characteristic of the Milnor fibre from the branch side:
// chi = sum_i c_i (1 - mu_i - sum_{j != i} I_O(g_i, g_j)).
inline long long chi_from_branches(const embedded_resolution& d) {
    validate_embedded(d);
    long long chi = 0;
    for (std::size_t i = 0; i < d.branches.size(); ++i) {
        if (!d.branches[i].mu)
            throw error(errc::missing_invariant_data,
                        "branch '" + d.branches[i].id + "' has no Milnor number");
        long long contact = 0;
        for (std::size_t j = 0; j < d.branches.size(); ++j) {
            if (j == i) continue;
            auto v = d.pairwise_mult(i, j);
            if (!v)
                throw error(errc::missing_invariant_data,
                            "missing pairwise intersection multiplicity for '" +
                                d.branches[i].id + "' and '" + d.branches[j].id + "'");
            contact += *v;
        }
        chi += d.branches[i].mult * (1 - *d.branches[i].mu - contact);
    }
    return chi;
}

// Upper bound for the Euler characteristic of the normalization of a
// reduced deformation: branch-side chi plus the supplied contact term.
inline long long local_deformation_bound(const embedded_resolution& d, long long contact) {
    if (contact < 0) throw error(errc::invalid_argument, "contact term must be non-negative");
    return chi_from_branches(d) + contact;
}

// Both chi computations must agree on consistent data; a mismatch flags
// user-supplied invariants that contradict the resolution combinatorics.
struct cross_check_result {
    bool consistent = false;
    long long chi_resolution = 0;
    long long chi_branches = 0;
};

inline cross_check_result cross_check(const embedded_resolution& d) {
    cross_check_result r;
    r.chi_resolution = chi_from_resolution(d);
    r.chi_branches = chi_from_branches(d);
    r.consistent = r.chi_resolution == r.chi_branches;
    return r;
}

}  // namespace nashgate
