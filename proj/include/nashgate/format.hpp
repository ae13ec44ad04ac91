#pragma once

#include <charconv>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/embedded.hpp"
#include "nashgate/graph.hpp"

namespace nashgate {

// A parsed .sdg document: a plain dual graph, or an embedded-resolution
// dataset when the text contains strict-transform statements.
using document = std::variant<dual_graph, embedded_resolution>;

inline const dual_graph& document_graph(const document& doc) {
    if (const auto* g = std::get_if<dual_graph>(&doc)) return *g;
    return std::get<embedded_resolution>(doc).exceptional;
}

namespace detail {

struct token {
    std::string text;
    source_pos pos;
};

inline std::vector<std::vector<token>> tokenize(std::string_view text) {
    std::vector<std::vector<token>> lines;
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        std::vector<token> toks;
        std::size_t col = 0;
        while (col < line.size()) {
            if (line[col] == ' ' || line[col] == '\t' || line[col] == '\r') {
                ++col;
                continue;
            }
            if (line[col] == '#') break;
            std::size_t tok_start = col;
            while (col < line.size() && line[col] != ' ' && line[col] != '\t' &&
                   line[col] != '\r' && line[col] != '#')
                ++col;
            toks.push_back({std::string(line.substr(tok_start, col - tok_start)),
                            {line_no, tok_start + 1}});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        ++line_no;
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

inline long long parse_int(const token& t, std::string_view what) {
    long long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw error(errc::syntax_error,
                    "expected integer for " + std::string(what) + ", got '" + t.text + "'",
                    t.pos);
    return value;
}

inline long long parse_uint(const token& t, std::string_view what) {
    long long v = parse_int(t, what);
    if (v < 0)
        throw error(errc::syntax_error,
                    std::string(what) + " must be non-negative, got '" + t.text + "'", t.pos);
    return v;
}

// "key=value" split; returns nullopt when '=' is absent.
inline std::optional<std::pair<std::string, token>> split_kv(const token& t) {
    auto eq = t.text.find('=');
    if (eq == std::string::npos) return std::nullopt;
    token value{t.text.substr(eq + 1), {t.pos.line, t.pos.column + eq + 1}};
    return std::make_pair(t.text.substr(0, eq), value);
}

}  // namespace detail

// Parses a .sdg document. Statement order is free except that exactly one
// `graph` declaration must be present; component order is declaration
// order; duplicate edges merge by summing multiplicities. The first
// violated rule is reported with its line and column.
inline document parse_document(std::string_view text) {
    using detail::parse_int;
    using detail::parse_uint;
    using detail::split_kv;
    using detail::token;

    auto lines = detail::tokenize(text);

    std::optional<std::string> graph_name;
    std::vector<component> components;
    std::vector<token> component_tokens;
    struct raw_edge {
        token a, b;
        long long mult;
    };
    std::vector<raw_edge> raw_edges;
    std::optional<token> arc_tok;
    std::vector<strict_transform> branches;
    struct raw_attach {
        std::size_t branch;
        token exc;
        long long mult;
    };
    std::vector<raw_attach> raw_attachments;
    struct raw_mu {
        token branch;
        long long value;
    };
    std::vector<raw_mu> raw_mus;
    struct raw_imult {
        token a, b;
        long long value;
    };
    std::vector<raw_imult> raw_imults;

    for (const auto& line : lines) {
        const token& head = line[0];
        const auto arg = [&](std::size_t k) -> const token& {
            if (k >= line.size())
                throw error(errc::syntax_error,
                            "statement '" + head.text + "' is missing an argument", head.pos);
            return line[k];
        };

        if (head.text == "graph") {
            if (graph_name)
                throw error(errc::duplicate_field, "multiple 'graph' declarations", head.pos);
            graph_name = arg(1).text;
            if (line.size() > 2)
                throw error(errc::syntax_error, "unexpected token '" + line[2].text + "'",
                            line[2].pos);
        } else if (head.text == "component") {
            component c;
            c.id = arg(1).text;
            bool have_self = false, have_genus = false;
            std::map<std::string, bool> seen;
            for (std::size_t k = 2; k < line.size(); ++k) {
                auto kv = split_kv(line[k]);
                if (!kv)
                    throw error(errc::syntax_error,
                                "expected key=value field, got '" + line[k].text + "'",
                                line[k].pos);
                const auto& [key, value] = *kv;
                if (seen[key])
                    throw error(errc::duplicate_field,
                                "field '" + key + "' given twice", line[k].pos);
                seen[key] = true;
                if (key == "self") {
                    c.self_int = parse_int(value, "self");
                    have_self = true;
                } else if (key == "genus") {
                    c.genus = parse_uint(value, "genus");
                    have_genus = true;
                } else if (key == "mu") {
                    c.mu = parse_uint(value, "mu");
                } else if (key == "eta") {
                    c.eta = parse_uint(value, "eta");
                } else if (key == "nu_extra") {
                    c.nu_extra = parse_uint(value, "nu_extra");
                } else {
                    throw error(errc::syntax_error, "unknown component field '" + key + "'",
                                line[k].pos);
                }
            }
            if (!have_self || !have_genus)
                throw error(errc::syntax_error,
                            "component requires self=<int> and genus=<uint>", head.pos);
            for (const auto& existing : components)
                if (existing.id == c.id)
                    throw error(errc::duplicate_component,
                                "duplicate component id '" + c.id + "'", arg(1).pos);
            components.push_back(std::move(c));
            component_tokens.push_back(arg(1));
        } else if (head.text == "edge") {
            const token& a = arg(1);
            const token& b = arg(2);
            long long mult = 1;
            if (line.size() > 3) {
                auto kv = split_kv(line[3]);
                if (!kv || kv->first != "mult")
                    throw error(errc::syntax_error,
                                "expected mult=<uint>, got '" + line[3].text + "'", line[3].pos);
                mult = parse_int(kv->second, "mult");
                if (mult < 1)
                    throw error(errc::negative_multiplicity,
                                "edge multiplicity must be positive", kv->second.pos);
                if (line.size() > 4)
                    throw error(errc::syntax_error, "unexpected token '" + line[4].text + "'",
                                line[4].pos);
            }
            if (a.text == b.text)
                throw error(errc::self_edge, "self-edge on component '" + a.text + "'", b.pos);
            raw_edges.push_back({a, b, mult});
        } else if (head.text == "arc") {
            if (arc_tok)
                throw error(errc::duplicate_field, "multiple 'arc' declarations", head.pos);
            arc_tok = arg(1);
        } else if (head.text == "strict") {
            strict_transform st;
            st.id = arg(1).text;
            for (const auto& existing : branches)
                if (existing.id == st.id)
                    throw error(errc::duplicate_branch,
                                "duplicate strict transform id '" + st.id + "'", arg(1).pos);
            bool have_mult = false;
            for (std::size_t k = 2; k < line.size(); ++k) {
                auto kv = split_kv(line[k]);
                if (!kv)
                    throw error(errc::syntax_error,
                                "expected key=value field, got '" + line[k].text + "'",
                                line[k].pos);
                const auto& [key, value] = *kv;
                if (key == "mult") {
                    if (have_mult)
                        throw error(errc::duplicate_field, "field 'mult' given twice",
                                    line[k].pos);
                    st.mult = parse_int(value, "mult");
                    if (st.mult < 1)
                        throw error(errc::negative_multiplicity,
                                    "strict transform multiplicity must be positive", value.pos);
                    have_mult = true;
                } else if (key == "attach") {
                    // attach=<excid>[:<uint>]
                    std::string spec = value.text;
                    auto colon = spec.find(':');
                    token exc{spec.substr(0, colon == std::string::npos ? spec.size() : colon),
                              value.pos};
                    long long n = 1;
                    if (colon != std::string::npos) {
                        token count{spec.substr(colon + 1),
                                    {value.pos.line, value.pos.column + colon + 1}};
                        n = parse_int(count, "attach multiplicity");
                        if (n < 1)
                            throw error(errc::negative_multiplicity,
                                        "attach multiplicity must be positive", count.pos);
                    }
                    raw_attachments.push_back({branches.size(), exc, n});
                    st.attachments.push_back({0, n});  // index resolved later
                } else {
                    throw error(errc::syntax_error, "unknown strict field '" + key + "'",
                                line[k].pos);
                }
            }
            if (!have_mult)
                throw error(errc::syntax_error, "strict requires mult=<uint>", head.pos);
            if (st.attachments.empty())
                throw error(errc::no_attachment,
                            "strict transform '" + st.id + "' attaches to no component",
                            head.pos);
            branches.push_back(std::move(st));
        } else if (head.text == "mu") {
            raw_mus.push_back({arg(1), parse_uint(arg(2), "mu")});
        } else if (head.text == "imult") {
            long long v = parse_int(arg(3), "imult");
            if (v < 1)
                throw error(errc::negative_multiplicity,
                            "pairwise intersection multiplicity must be positive", arg(3).pos);
            raw_imults.push_back({arg(1), arg(2), v});
        } else {
            throw error(errc::syntax_error, "unknown statement '" + head.text + "'", head.pos);
        }
    }

    if (!graph_name)
        throw error(errc::missing_graph_decl, "missing 'graph <name>' declaration");

    dual_graph g;
    g.name = *graph_name;
    g.components = std::move(components);

    const auto resolve_component = [&](const detail::token& t) -> std::size_t {
        auto idx = g.index_of(t.text);
        if (!idx)
            throw error(errc::unknown_component, "unknown component id '" + t.text + "'", t.pos);
        return *idx;
    };

    std::vector<graph_edge> edges;
    for (const auto& re : raw_edges)
        edges.push_back({resolve_component(re.a), resolve_component(re.b), re.mult});
    detail::canonicalize_edges(edges);
    g.edges = std::move(edges);

    if (!detail::is_connected(g.components.size(), g.edges)) {
        source_pos pos = component_tokens.empty() ? source_pos{} : component_tokens[0].pos;
        throw error(errc::disconnected, "graph '" + g.name + "' is not connected", pos);
    }

    if (arc_tok) g.arc_target = resolve_component(*arc_tok);

    if (branches.empty() && raw_mus.empty() && raw_imults.empty()) return g;

    embedded_resolution d;
    d.exceptional = std::move(g);
    d.branches = std::move(branches);
    {
        std::size_t cursor = 0;
        for (std::size_t b = 0; b < d.branches.size(); ++b)
            for (auto& att : d.branches[b].attachments) {
                const auto& raw = raw_attachments[cursor++];
                att.first = [&] {
                    auto idx = d.exceptional.index_of(raw.exc.text);
                    if (!idx)
                        throw error(errc::unknown_component,
                                    "unknown component id '" + raw.exc.text + "'", raw.exc.pos);
                    return *idx;
                }();
            }
    }
    const auto resolve_branch = [&](const detail::token& t) -> std::size_t {
        auto idx = d.branch_index(t.text);
        if (!idx)
            throw error(errc::unknown_branch, "unknown strict transform id '" + t.text + "'",
                        t.pos);
        return *idx;
    };
    for (const auto& rm : raw_mus) {
        std::size_t b = resolve_branch(rm.branch);
        if (d.branches[b].mu)
            throw error(errc::duplicate_field,
                        "mu given twice for branch '" + rm.branch.text + "'", rm.branch.pos);
        d.branches[b].mu = rm.value;
    }
    for (const auto& ri : raw_imults) {
        std::size_t a = resolve_branch(ri.a);
        std::size_t b = resolve_branch(ri.b);
        if (a == b)
            throw error(errc::invalid_argument,
                        "imult requires two distinct branches", ri.b.pos);
        if (a > b) std::swap(a, b);
        if (d.pairwise.count({a, b}))
            throw error(errc::duplicate_field, "imult given twice for the same pair", ri.a.pos);
        d.pairwise[{a, b}] = ri.value;
    }
    validate_embedded(d);
    return d;
}

// Canonical serialization. Byte-stable for a fixed document: statements in
// fixed section order, edges sorted by endpoint indices, optional fields
// emitted only when they differ from their defaults.
inline std::string serialize(const dual_graph& g) {
    std::ostringstream out;
    out << "graph " << g.name << "\n";
    for (const auto& c : g.components) {
        out << "component " << c.id << " self=" << c.self_int << " genus=" << c.genus;
        if (c.mu != 0) out << " mu=" << c.mu;
        if (c.eta != 0) out << " eta=" << c.eta;
        if (c.nu_extra != 0) out << " nu_extra=" << c.nu_extra;
        out << "\n";
    }
    for (const auto& e : g.edges) {
        out << "edge " << g.components[e.i].id << " " << g.components[e.j].id;
        if (e.mult != 1) out << " mult=" << e.mult;
        out << "\n";
    }
    if (g.arc_target) out << "arc " << g.components[*g.arc_target].id << "\n";
    return out.str();
}

inline std::string serialize(const embedded_resolution& d) {
    std::ostringstream out;
    out << serialize(d.exceptional);
    for (const auto& b : d.branches) {
        out << "strict " << b.id << " mult=" << b.mult;
        for (const auto& [e, n] : b.attachments) {
            out << " attach=" << d.exceptional.components[e].id;
            if (n != 1) out << ":" << n;
        }
        out << "\n";
    }
    for (const auto& b : d.branches)
        if (b.mu) out << "mu " << b.id << " " << *b.mu << "\n";
    for (const auto& [key, v] : d.pairwise)
        out << "imult " << d.branches[key.first].id << " " << d.branches[key.second].id << " "
            << v << "\n";
    return out.str();
}

inline std::string serialize(const document& doc) {
    if (const auto* g = std::get_if<dual_graph>(&doc)) return serialize(*g);
    return serialize(std::get<embedded_resolution>(doc));
}

}  // namespace nashgate
