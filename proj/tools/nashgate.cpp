// nashgate: exact-arithmetic analysis of weighted dual graphs of surface
// singularity resolutions. The CLI is a thin adapter over the library; all
// domain logic lives in the headers under include/nashgate.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nashgate/nashgate.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_invalid_input = 2;
constexpr int exit_not_issued = 3;

struct common_opts {
    std::string path;
    std::string catalog;
    bool as_json = false;
};

nashgate::document load_input(const common_opts& opts) {
    if (!opts.catalog.empty() && !opts.path.empty())
        throw nashgate::error(nashgate::errc::invalid_argument,
                              "give an input file or --catalog, not both");
    if (!opts.catalog.empty()) return nashgate::catalog_lookup(opts.catalog);
    if (opts.path.empty())
        throw nashgate::error(nashgate::errc::invalid_argument,
                              "an input file or --catalog <name> is required");
    std::ifstream file(opts.path);
    if (!file)
        throw nashgate::error(nashgate::errc::invalid_argument,
                              "cannot open '" + opts.path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return nashgate::parse_document(buf.str());
}

const nashgate::dual_graph& require_graph(const nashgate::document& doc) {
    return nashgate::document_graph(doc);
}

const nashgate::embedded_resolution& require_embedded(const nashgate::document& doc) {
    if (const auto* d = std::get_if<nashgate::embedded_resolution>(&doc)) return *d;
    throw nashgate::error(nashgate::errc::invalid_argument,
                          "input is not an embedded-resolution dataset (no strict "
                          "transforms declared)");
}

std::size_t resolve_target(const nashgate::dual_graph& g, const std::string& target_id) {
    if (!target_id.empty()) {
        auto idx = g.index_of(target_id);
        if (!idx)
            throw nashgate::error(nashgate::errc::unknown_component,
                                  "unknown component id '" + target_id + "'");
        return *idx;
    }
    if (g.arc_target) return *g.arc_target;
    throw nashgate::error(nashgate::errc::missing_target,
                          "no --target given and the graph declares no arc");
}

std::vector<long long> parse_a_vector(const std::string& text) {
    std::vector<long long> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            long long v = std::stoll(piece, &used);
            if (used != piece.size() || v < 0) throw std::invalid_argument(piece);
            values.push_back(v);
        } catch (const std::exception&) {
            throw nashgate::error(nashgate::errc::invalid_argument,
                                  "--a expects comma-separated non-negative integers, got '" +
                                      text + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

void emit(const nashgate::json& report, const std::string& human, bool as_json) {
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << human;
}

std::string rat_str(const nashgate::big_rat& q) {
    return nashgate::is_integer(q) ? nashgate::rat_num(q).str() : q.str();
}

std::string vector_str(const std::vector<nashgate::big_rat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + ")";
}

template <typename T>
std::string vector_str(const std::vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

int run_validate(const common_opts& opts) {
    auto doc = load_input(opts);
    auto payload = nashgate::validate_payload(doc);
    std::ostringstream human;
    const auto& g = require_graph(doc);
    human << "input is a valid " << payload["kind"].get<std::string>() << " '" << g.name
          << "' with " << g.components.size() << " component(s) and " << g.edges.size()
          << " edge(s)\n";
    emit(nashgate::make_report("validate", doc, payload), human.str(), opts.as_json);
    return exit_ok;
}

int run_analyze(const common_opts& opts) {
    auto doc = load_input(opts);
    const auto& g = require_graph(doc);
    auto payload = nashgate::analyze_payload(g);
    std::ostringstream human;
    human << "graph " << g.name << "\n";
    human << "  negative definite: " << (payload["negative_definite"].get<bool>() ? "yes" : "no")
          << "\n";
    if (payload.contains("sign_report")) {
        human << "  inverse entries all <= 0: "
              << (payload["sign_report"]["all_nonpositive"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        human << "  witness: leading minor of order "
              << payload["witness_minor_order"].get<std::size_t>() << " is "
              << payload["witness_minor_value"].dump() << "\n";
    }
    human << "  minimal: " << (payload["minimality"]["minimal"].get<bool>() ? "yes" : "no")
          << "\n";
    emit(nashgate::make_report("analyze", doc, payload), human.str(), opts.as_json);
    return exit_ok;
}

int run_scan(const common_opts& opts, const std::string& target_id, long long max_returns,
             unsigned jobs) {
    auto doc = load_input(opts);
    const auto& g = require_graph(doc);
    std::size_t target = resolve_target(g, target_id);
    auto report = nashgate::scan_adjacencies(g, target, max_returns, jobs);
    auto payload = nashgate::scan_payload(g, report);
    std::ostringstream human;
    human << "graph " << g.name << ", target " << g.components[target].id << ", max returns "
          << max_returns << "\n";
    human << "  candidates: " << report.total << "\n";
    human << "  feasible: " << report.count_feasible << "  (ruled out: negative "
          << report.count_negative << ", non-integral " << report.count_nonintegral
          << ", both " << report.count_both << ")\n";
    for (const auto& s : report.feasible)
        human << "    b=" << vector_str(s.b) << "  a=" << vector_str(s.a) << "\n";
    emit(nashgate::make_report("scan", doc, payload), human.str(), opts.as_json);
    return exit_ok;
}

int run_bound(const common_opts& opts, const std::string& target_id, const std::string& a_text) {
    auto doc = load_input(opts);
    const auto& g = require_graph(doc);
    std::size_t target = resolve_target(g, target_id);
    if (a_text.empty())
        throw nashgate::error(nashgate::errc::invalid_argument,
                              "bound requires --a <comma-separated uints>");
    auto a = parse_a_vector(a_text);
    auto report = nashgate::evaluate_bounds(g, target, a);
    auto payload = nashgate::bound_payload(g, target, report);
    std::ostringstream human;
    human << "graph " << g.name << ", target " << g.components[target].id << ", a="
          << vector_str(a) << "\n";
    human << "  returns bound: " << report.returns_term << "\n";
    human << "  refined bound: " << report.refined << "\n";
    human << "  final bound:   " << report.final_value << "  -> "
          << (report.impossible_wedge ? "IMPOSSIBLE_WEDGE" : "INCONCLUSIVE") << "\n";
    emit(nashgate::make_report("bound", doc, payload), human.str(), opts.as_json);
    return exit_ok;
}

int run_certificate(const common_opts& opts) {
    auto doc = load_input(opts);
    const auto& g = require_graph(doc);
    auto cert = nashgate::certificate(g);
    auto payload = nashgate::certificate_payload(g, cert);
    std::ostringstream human;
    human << "graph " << g.name << "\n";
    human << "  negative definite: " << (cert.negative_definite ? "yes" : "no") << "\n";
    human << "  minimal: " << (cert.minimal ? "yes" : "no") << "\n";
    human << "  component terms: " << vector_str(cert.terms) << "\n";
    if (cert.issued) {
        human << "  certificate issued: no adjacency-realizing wedge exists\n";
    } else {
        human << "  certificate withheld:";
        for (auto f : cert.failures) human << " " << nashgate::certificate_failure_name(f);
        human << "\n";
    }
    emit(nashgate::make_report("certificate", doc, payload), human.str(), opts.as_json);
    return cert.issued ? exit_ok : exit_not_issued;
}

int run_milnor(const common_opts& opts) {
    auto doc = load_input(opts);
    const auto& d = require_embedded(doc);
    auto payload = nashgate::milnor_payload(d);
    std::ostringstream human;
    human << "dataset " << d.exceptional.name << "\n";
    human << "  total transform: " << payload["total_transform"].dump() << "\n";
    human << "  chi (resolution formula): " << payload["chi_from_resolution"].get<long long>()
          << "\n";
    human << "  chi (branch formula):     " << payload["chi_from_branches"].get<long long>()
          << "\n";
    human << "  consistent: " << (payload["consistent"].get<bool>() ? "yes" : "no") << "\n";
    emit(nashgate::make_report("milnor", doc, payload), human.str(), opts.as_json);
    return exit_ok;
}

int run_catalog(bool as_json) {
    auto payload = nashgate::catalog_payload();
    std::ostringstream human;
    for (const auto& entry : payload["entries"])
        human << entry["name"].get<std::string>() << "  [" << entry["kind"].get<std::string>()
              << ", " << entry["components"].get<std::size_t>() << " component(s)]\n";
    nashgate::json report;
    report["command"] = "catalog";
    report["version"] = nashgate::version;
    report["payload"] = payload;
    emit(report, human.str(), as_json);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for resolution dual graphs"};
    app.require_subcommand(1);

    common_opts opts;
    std::string target_id;
    std::string a_text;
    long long max_returns = 12;
    unsigned jobs = 1;
    std::string active;

    const auto add_input = [&](CLI::App* cmd, bool positional = true) {
        if (positional) cmd->add_option("file", opts.path, "input .sdg file");
        cmd->add_option("--catalog", opts.catalog, "use a built-in catalog entry");
        cmd->add_flag("--json", opts.as_json, "machine-readable report on stdout");
    };

    auto* validate = app.add_subcommand("validate", "parse and validate an input document");
    add_input(validate);
    auto* analyze = app.add_subcommand(
        "analyze", "intersection matrix, definiteness, inverse signs, minimality");
    add_input(analyze);
    auto* scan = app.add_subcommand("scan", "enumerate and classify adjacency candidates");
    add_input(scan);
    scan->add_option("--target", target_id, "target component id");
    scan->add_option("--max-returns", max_returns, "bound on total returns")
        ->default_val(12);
    scan->add_option("--jobs", jobs, "worker threads for candidate evaluation")
        ->default_val(1);
    auto* bound = app.add_subcommand("bound", "evaluate the Euler characteristic bounds");
    add_input(bound);
    bound->add_option("--target", target_id, "target component id");
    bound->add_option("--a", a_text, "comma-separated exceptional multiplicities");
    auto* certificate =
        app.add_subcommand("certificate", "graph-level wedge obstruction certificate");
    add_input(certificate);
    auto* milnor = app.add_subcommand(
        "milnor", "total transform and Milnor fibre Euler characteristic cross-check");
    add_input(milnor);
    auto* catalog = app.add_subcommand("catalog", "list built-in datasets");
    catalog->add_flag("--json", opts.as_json, "machine-readable report on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid_input;
    }

    if (validate->parsed()) active = "validate";
    if (analyze->parsed()) active = "analyze";
    if (scan->parsed()) active = "scan";
    if (bound->parsed()) active = "bound";
    if (certificate->parsed()) active = "certificate";
    if (milnor->parsed()) active = "milnor";
    if (catalog->parsed()) active = "catalog";

    try {
        if (active == "validate") return run_validate(opts);
        if (active == "analyze") return run_analyze(opts);
        if (active == "scan") return run_scan(opts, target_id, max_returns, jobs);
        if (active == "bound") return run_bound(opts, target_id, a_text);
        if (active == "certificate") return run_certificate(opts);
        if (active == "milnor") return run_milnor(opts);
        if (active == "catalog") return run_catalog(opts.as_json);
        std::cerr << "no subcommand selected\n";
        return exit_invalid_input;
    } catch (const nashgate::error& e) {
        std::cerr << "error [" << e.code_name() << "]";
        if (e.pos().line != 0) std::cerr << " at line " << e.pos().line << ", column "
                                         << e.pos().column;
        std::cerr << ": " << e.what() << "\n";
        if (opts.as_json) std::cout << nashgate::make_error_report(active, e).dump(2) << "\n";
        return e.code() == nashgate::errc::internal ? exit_internal : exit_invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
