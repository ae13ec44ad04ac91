#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/exact.hpp"
#include "nashgate/graph.hpp"
#include "nashgate/lattice.hpp"
#include "nashgate/matrix.hpp"

namespace nashgate {

// A candidate wedge adjacency: the component the special arc meets
// transversely, plus the prescribed returns b_i of the generic member.
struct adjacency_candidate {
    std::size_t target = 0;
    std::vector<long long> returns;

    bool has_source() const {
        for (std::size_t i = 0; i < returns.size(); ++i)
            if (i != target && returns[i] >= 1) return true;
        return false;
    }
};

enum class feasibility {
    feasible,
    ruled_out_negative,
    ruled_out_nonintegral,
    ruled_out_both,
};

constexpr std::string_view feasibility_name(feasibility f) {
    switch (f) {
        case feasibility::feasible: return "FEASIBLE";
        case feasibility::ruled_out_negative: return "RULED_OUT_NEGATIVE";
        case feasibility::ruled_out_nonintegral: return "RULED_OUT_NONINTEGRAL";
        case feasibility::ruled_out_both: return "RULED_OUT_BOTH";
    }
    return "RULED_OUT_BOTH";
}

// Exact solution of the limit-divisor system M a = rhs(b, target), where
// rhs has -1 + b_target at the target index and b_i elsewhere. A candidate
// is feasible iff every coefficient is a non-negative integer.
struct limit_divisor_solution {
    std::vector<big_rat> a;
    feasibility classification = feasibility::feasible;
    std::vector<std::size_t> negative_entries;
    std::vector<std::size_t> nonintegral_entries;
};

namespace detail {

inline std::vector<big_int> limit_rhs(std::size_t n, std::size_t target,
                                      const std::vector<long long>& b) {
    std::vector<big_int> rhs(n);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = b[i];
    rhs[target] -= 1;
    return rhs;
}

inline limit_divisor_solution classify_solution(std::vector<big_rat> a) {
    limit_divisor_solution sol;
    sol.a = std::move(a);
    for (std::size_t i = 0; i < sol.a.size(); ++i) {
        if (sol.a[i] < 0) sol.negative_entries.push_back(i);
        if (!is_integer(sol.a[i])) sol.nonintegral_entries.push_back(i);
    }
    const bool neg = !sol.negative_entries.empty();
    const bool frac = !sol.nonintegral_entries.empty();
    sol.classification = neg && frac    ? feasibility::ruled_out_both
                         : neg          ? feasibility::ruled_out_negative
                         : frac         ? feasibility::ruled_out_nonintegral
                                        : feasibility::feasible;
    return sol;
}

inline void check_candidate_shape(const dual_graph& g, std::size_t target,
                                  const std::vector<long long>& b) {
    if (target >= g.components.size())
        throw error(errc::invalid_argument, "target index out of range");
    if (b.size() != g.components.size())
        throw error(errc::dimension_mismatch, "return vector length must match component count");
    for (long long v : b)
        if (v < 0) throw error(errc::invalid_argument, "returns must be non-negative");
}

}  // namespace detail

// Reusable solver: validates the graph once and caches the exact inverse
// in adjugate form, so bulk solves stay in integer arithmetic.
class limit_divisor_solver {
  public:
    explicit limit_divisor_solver(const dual_graph& g) : graph_(&g) {
        auto m = intersection_matrix(g);
        if (!is_negative_definite(m).negative_definite)
            throw error(errc::not_negative_definite, "graph is not negative definite");
        auto inv = invert_integer_matrix(m);
        if (!inv) throw error(errc::singular, "intersection matrix is singular");
        inverse_ = std::move(*inv);
    }

    limit_divisor_solution solve(std::size_t target, const std::vector<long long>& b) const {
        detail::check_candidate_shape(*graph_, target, b);
        return detail::classify_solution(
            inverse_.solve(detail::limit_rhs(b.size(), target, b)));
    }

  private:
    const dual_graph* graph_;
    exact_inverse inverse_;
};

inline limit_divisor_solution solve_limit_divisor(const dual_graph& g, std::size_t target,
                                                  const std::vector<long long>& b) {
    return limit_divisor_solver(g).solve(target, b);
}

enum class reject_reason {
    negative_entry,
    non_integral_entry,
    target_return_nonzero,
    target_coefficient_not_positive,
};

constexpr std::string_view reject_reason_name(reject_reason r) {
    switch (r) {
        case reject_reason::negative_entry: return "NEGATIVE_ENTRY";
        case reject_reason::non_integral_entry: return "NON_INTEGRAL_ENTRY";
        case reject_reason::target_return_nonzero: return "TARGET_RETURN_NONZERO";
        case reject_reason::target_coefficient_not_positive:
            return "TARGET_COEFFICIENT_NOT_POSITIVE";
    }
    return "NEGATIVE_ENTRY";
}

struct verdict_record {
    bool impossible = true;
    std::vector<reject_reason> reasons;
};

// Intersection-theoretic test of one candidate. Impossible when the
// solution has a negative or non-integral entry, when the target return is
// nonzero despite a source return, or when the target coefficient fails to
// be positive.
inline verdict_record classify_candidate(const limit_divisor_solution& sol,
                                         const adjacency_candidate& cand) {
    if (cand.target >= cand.returns.size() || sol.a.size() != cand.returns.size())
        throw error(errc::dimension_mismatch, "solution and candidate sizes disagree");
    if (!cand.has_source())
        throw error(errc::invalid_candidate,
                    "adjacency candidate needs a source return on some other component");
    verdict_record v;
    if (!sol.negative_entries.empty()) v.reasons.push_back(reject_reason::negative_entry);
    if (!sol.nonintegral_entries.empty())
        v.reasons.push_back(reject_reason::non_integral_entry);
    if (cand.returns[cand.target] != 0)
        v.reasons.push_back(reject_reason::target_return_nonzero);
    else if (sol.classification == feasibility::feasible && sol.a[cand.target] <= 0)
        v.reasons.push_back(reject_reason::target_coefficient_not_positive);
    v.impossible = !v.reasons.empty();
    return v;
}

// One scan result: the return vector and its exact solution.
struct scan_survivor {
    std::vector<long long> b;
    std::vector<big_rat> a;

    bool operator==(const scan_survivor&) const = default;
};

struct scan_report {
    std::string graph_name;
    std::size_t target = 0;
    long long max_returns = 0;
    unsigned long long total = 0;
    unsigned long long count_feasible = 0;
    unsigned long long count_negative = 0;
    unsigned long long count_nonintegral = 0;
    unsigned long long count_both = 0;
    std::vector<scan_survivor> feasible;

    bool operator==(const scan_report&) const = default;
};

namespace detail {

// All b with b[target] = 0, 1 <= sum b <= max_total and some source entry,
// ordered by total ascending then lexicographically.
inline std::vector<std::vector<long long>> enumerate_returns(std::size_t n, std::size_t target,
                                                             long long max_total) {
    std::vector<std::vector<long long>> out;
    std::vector<std::size_t> free_pos;
    for (std::size_t i = 0; i < n; ++i)
        if (i != target) free_pos.push_back(i);
    if (free_pos.empty()) return out;

    std::vector<long long> comp(free_pos.size(), 0);
    for (long long total = 1; total <= max_total; ++total) {
        // lexicographic compositions of `total` over the free positions
        const auto emit = [&] {
            std::vector<long long> b(n, 0);
            for (std::size_t k = 0; k < free_pos.size(); ++k) b[free_pos[k]] = comp[k];
            out.push_back(std::move(b));
        };
        const std::size_t m = comp.size();
        std::fill(comp.begin(), comp.end(), 0);
        comp[m - 1] = total;
        emit();
        while (true) {
            // advance to the next composition in lexicographic order
            std::size_t k = m - 1;
            while (k > 0 && comp[k] == 0) --k;
            if (k == 0) break;
            long long tail = comp[k];
            comp[k] = 0;
            comp[k - 1] += 1;
            comp[m - 1] = tail - 1;
            emit();
        }
    }
    return out;
}

}  // namespace detail

// Enumerates every candidate with prescribed returns up to the bound and
// classifies each by the exact linear solve. Evaluation may run on several
// threads; results are indexed by enumeration order, so the report is
// byte-identical regardless of scheduling.
inline scan_report scan_adjacencies(const dual_graph& g, std::size_t target,
                                    long long max_returns, unsigned jobs = 1) {
    if (target >= g.components.size())
        throw error(errc::invalid_argument, "target index out of range");
    if (max_returns < 1)
        throw error(errc::invalid_argument, "max returns bound must be at least 1");
    if (jobs < 1) throw error(errc::invalid_argument, "jobs must be at least 1");

    const limit_divisor_solver solver(g);
    const auto candidates =
        detail::enumerate_returns(g.components.size(), target, max_returns);
    std::vector<limit_divisor_solution> solutions(candidates.size());

    const auto evaluate = [&](std::size_t idx) {
        solutions[idx] = solver.solve(target, candidates[idx]);
    };

    unsigned workers = jobs;
    if (candidates.size() < workers) workers = static_cast<unsigned>(candidates.size());
    if (workers == 0) workers = 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < candidates.size();
                     i = next.fetch_add(1))
                    evaluate(i);
            });
        for (auto& t : pool) t.join();
    }

    scan_report report;
    report.graph_name = g.name;
    report.target = target;
    report.max_returns = max_returns;
    report.total = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        switch (solutions[i].classification) {
            case feasibility::feasible:
                ++report.count_feasible;
                report.feasible.push_back({candidates[i], std::move(solutions[i].a)});
                break;
            case feasibility::ruled_out_negative: ++report.count_negative; break;
            case feasibility::ruled_out_nonintegral: ++report.count_nonintegral; break;
            case feasibility::ruled_out_both: ++report.count_both; break;
        }
    }
    return report;
}

}  // namespace nashgate
