#pragma once

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>

#include "nashgate/adjacency.hpp"
#include "nashgate/catalog.hpp"
#include "nashgate/euler.hpp"
#include "nashgate/exact.hpp"
#include "nashgate/format.hpp"
#include "nashgate/lattice.hpp"
#include "nashgate/milnor.hpp"
#include "nashgate/version.hpp"

namespace nashgate {

// Reports use ordered JSON so field order is fixed by construction and two
// runs on identical input produce byte-identical documents.
using json = nlohmann::ordered_json;

// FNV-1a 64-bit over the canonical serialization of the parsed input.
// Stable across whitespace/comment variations of the same document.
inline std::string content_digest(const document& doc) {
    const std::string text = serialize(doc);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

// All numeric report fields are exact: integers as JSON integers (strings
// beyond 64 bits), rationals as {num, den} in lowest terms.
inline json to_json(const big_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline json to_json(const big_rat& q) {
    json j;
    j["num"] = to_json(rat_num(q));
    j["den"] = to_json(rat_den(q));
    return j;
}

inline json to_json(const matrix<big_int>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const matrix<big_rat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json component_ids(const dual_graph& g) {
    json ids = json::array();
    for (const auto& c : g.components) ids.push_back(c.id);
    return ids;
}

inline json validate_payload(const document& doc) {
    const dual_graph& g = document_graph(doc);
    json payload;
    payload["name"] = g.name;
    payload["kind"] = std::holds_alternative<dual_graph>(doc) ? "dual-graph"
                                                              : "embedded-resolution";
    payload["components"] = g.components.size();
    payload["edges"] = g.edges.size();
    if (const auto* d = std::get_if<embedded_resolution>(&doc))
        payload["branches"] = d->branches.size();
    payload["valid"] = true;
    return payload;
}

inline json analyze_payload(const dual_graph& g) {
    json payload;
    payload["name"] = g.name;
    payload["components"] = component_ids(g);
    auto m = intersection_matrix(g);
    payload["matrix"] = to_json(m);
    auto def = is_negative_definite(m);
    payload["negative_definite"] = def.negative_definite;
    if (!def.negative_definite) {
        payload["witness_minor_order"] = *def.witness_order;
        payload["witness_minor_value"] = to_json(def.witness_minor);
    }
    if (def.negative_definite) {
        auto sr = inverse_sign_report(m);
        json sign;
        sign["inverse"] = to_json(sr.inverse);
        sign["all_nonpositive"] = sr.all_nonpositive;
        json off = json::array();
        for (const auto& e : sr.offending) {
            json entry;
            entry["row"] = e.row;
            entry["col"] = e.col;
            entry["value"] = to_json(e.value);
            off.push_back(std::move(entry));
        }
        sign["offending"] = std::move(off);
        payload["sign_report"] = std::move(sign);
    }
    auto violations = minimality_audit(g);
    json audit;
    audit["minimal"] = violations.empty();
    json ids = json::array();
    for (std::size_t i : violations) ids.push_back(g.components[i].id);
    audit["violations"] = std::move(ids);
    payload["minimality"] = std::move(audit);
    return payload;
}

inline json scan_payload(const dual_graph& g, const scan_report& r) {
    json payload;
    payload["name"] = r.graph_name;
    payload["target"] = g.components[r.target].id;
    payload["target_index"] = r.target;
    payload["max_returns"] = r.max_returns;
    payload["convention"] =
        "returns enumerate b with b[target] = 0 and 1 <= sum(b) <= max_returns; a "
        "candidate with b[target] >= 1 cannot realize an adjacency since non-negative "
        "integral solutions then force every other return to vanish";
    payload["total"] = r.total;
    json counts;
    counts["feasible"] = r.count_feasible;
    counts["ruled_out_negative"] = r.count_negative;
    counts["ruled_out_nonintegral"] = r.count_nonintegral;
    counts["ruled_out_both"] = r.count_both;
    payload["counts"] = std::move(counts);
    json survivors = json::array();
    for (const auto& s : r.feasible) {
        json item;
        item["b"] = s.b;
        json a = json::array();
        for (const auto& q : s.a) a.push_back(to_json(q));
        item["a"] = std::move(a);
        survivors.push_back(std::move(item));
    }
    payload["survivors"] = std::move(survivors);
    return payload;
}

inline json bound_payload(const dual_graph& g, std::size_t target, const bound_report& r) {
    json payload;
    payload["name"] = g.name;
    payload["target"] = g.components[target].id;
    payload["a"] = r.a;
    json support;
    support["nu"] = r.support.nu;
    support["chi_dot"] = r.support.chi_dot;
    support["delta"] = r.support.delta;
    payload["support"] = std::move(support);
    payload["theta"] = r.theta;
    payload["returns_bound"] = r.returns_term;
    payload["refined_bound"] = r.refined;
    payload["terms"] = r.terms;
    payload["final_bound"] = r.final_value;
    payload["verdict"] = r.impossible_wedge ? "IMPOSSIBLE_WEDGE" : "INCONCLUSIVE";
    return payload;
}

inline json certificate_payload(const dual_graph& g, const graph_certificate& cert) {
    json payload;
    payload["name"] = cert.graph_name;
    payload["negative_definite"] = cert.negative_definite;
    payload["minimal"] = cert.minimal;
    json violations = json::array();
    for (std::size_t i : cert.minimality_violations)
        violations.push_back(g.components[i].id);
    payload["minimality_violations"] = std::move(violations);
    payload["components"] = component_ids(g);
    payload["terms"] = cert.terms;
    payload["issued"] = cert.issued;
    json reasons = json::array();
    for (auto f : cert.failures) reasons.push_back(std::string(certificate_failure_name(f)));
    payload["failure_reasons"] = std::move(reasons);
    payload["statement"] =
        cert.issued
            ? "every candidate limit divisor with non-negative integral coefficients and "
              "positive target coefficient satisfies final bound <= 0 < 1, so no wedge "
              "realizing an adjacency between distinct exceptional components exists"
            : "certificate withheld; see failure_reasons";
    return payload;
}

inline json milnor_payload(const embedded_resolution& d) {
    json payload;
    payload["name"] = d.exceptional.name;
    auto tt = compute_total_transform(d);
    json a = json::array();
    for (const auto& v : tt.a) a.push_back(to_json(v));
    payload["total_transform"] = std::move(a);
    auto cc = cross_check(d);
    payload["chi_from_resolution"] = cc.chi_resolution;
    payload["chi_from_branches"] = cc.chi_branches;
    payload["consistent"] = cc.consistent;
    return payload;
}

inline json catalog_payload() {
    json payload;
    json entries = json::array();
    for (const auto& name : catalog_names()) {
        auto doc = catalog_lookup(name);
        const dual_graph& g = document_graph(doc);
        json entry;
        entry["name"] = name;
        entry["kind"] = std::holds_alternative<dual_graph>(doc) ? "dual-graph"
                                                                : "embedded-resolution";
        entry["components"] = g.components.size();
        entries.push_back(std::move(entry));
    }
    payload["entries"] = std::move(entries);
    return payload;
}

inline json make_report(std::string_view command, const document& doc, json payload) {
    json report;
    report["command"] = command;
    report["version"] = version;
    report["input_digest"] = content_digest(doc);
    report["payload"] = std::move(payload);
    return report;
}

inline json make_error_report(std::string_view command, const error& e) {
    json report;
    report["command"] = command;
    report["version"] = version;
    json err;
    err["code"] = std::string(e.code_name());
    err["message"] = e.what();
    if (e.pos().line != 0) {
        err["line"] = e.pos().line;
        err["column"] = e.pos().column;
    }
    report["error"] = std::move(err);
    return report;
}

}  // namespace nashgate
