#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/exact.hpp"
#include "nashgate/graph.hpp"
#include "nashgate/matrix.hpp"

namespace nashgate {

// Sylvester criterion outcome. When the matrix is not negative definite,
// witness_order is the size k of the first leading block of -M whose
// determinant fails to be positive, and witness_minor its exact value.
struct definiteness_result {
    bool negative_definite = false;
    std::optional<std::size_t> witness_order;
    big_int witness_minor;
};

// Exact Sylvester test: M is negative definite iff every leading principal
// minor of -M is positive. Pure integer arithmetic, no tolerance.
inline definiteness_result is_negative_definite(const matrix<big_int>& m) {
    if (!m.is_symmetric())
        throw error(errc::invalid_argument, "definiteness test requires a symmetric matrix");
    matrix<big_int> neg(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            neg(i, j) = -m(i, j);
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        big_int minor = leading_minor(neg, k);
        if (minor <= 0) return {false, k, minor};
    }
    return {true, std::nullopt, big_int(0)};
}

struct offending_entry {
    std::size_t row = 0;
    std::size_t col = 0;
    big_rat value;

    bool operator==(const offending_entry&) const = default;
};

// Exact rational inverse plus its sign pattern. For the intersection
// matrix of a connected resolution graph every entry of M^{-1} is
// non-positive, so all_nonpositive acts as a structural self-check.
struct sign_report {
    matrix<big_rat> inverse;
    bool all_nonpositive = true;
    std::vector<offending_entry> offending;
};

inline sign_report inverse_sign_report(const matrix<big_int>& m) {
    auto def = is_negative_definite(m);
    if (!def.negative_definite) {
        if (def.witness_minor == 0 && determinant(m) == 0)
            throw error(errc::singular, "intersection matrix is singular");
        throw error(errc::not_negative_definite, "intersection matrix is not negative definite");
    }
    auto inv = inverse(to_rational(m));
    if (!inv) throw error(errc::singular, "intersection matrix is singular");
    sign_report report{std::move(*inv), true, {}};
    for (std::size_t i = 0; i < report.inverse.rows(); ++i)
        for (std::size_t j = 0; j < report.inverse.cols(); ++j)
            if (report.inverse(i, j) > 0) {
                report.all_nonpositive = false;
                report.offending.push_back({i, j, report.inverse(i, j)});
            }
    return report;
}

// Components that would make the resolution non-minimal: smooth rational
// (-1)-curves. A (-1)-component with positive genus or recorded
// singularities (mu/eta) is exempt.
inline std::vector<std::size_t> minimality_audit(const dual_graph& g) {
    std::vector<std::size_t> violations;
    for (std::size_t i = 0; i < g.components.size(); ++i) {
        const auto& c = g.components[i];
        if (c.self_int == -1 && c.genus == 0 && c.mu == 0 && c.eta == 0)
            violations.push_back(i);
    }
    return violations;
}

}  // namespace nashgate
