#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nashgate {

// Every failure mode of the library carries one of these codes. Parse-time
// diagnostics additionally carry a source position.
enum class errc {
    syntax_error,
    missing_graph_decl,
    duplicate_component,
    duplicate_field,
    duplicate_branch,
    self_edge,
    unknown_component,
    unknown_branch,
    disconnected,
    negative_multiplicity,
    no_attachment,
    unknown_catalog_name,
    singular,
    not_negative_definite,
    non_integral_total_transform,
    missing_invariant_data,
    dimension_mismatch,
    invalid_argument,
    invalid_candidate,
    missing_target,
    internal,
};

constexpr std::string_view errc_name(errc c) {
    switch (c) {
        case errc::syntax_error: return "SYNTAX_ERROR";
        case errc::missing_graph_decl: return "MISSING_GRAPH_DECL";
        case errc::duplicate_component: return "DUPLICATE_COMPONENT";
        case errc::duplicate_field: return "DUPLICATE_FIELD";
        case errc::duplicate_branch: return "DUPLICATE_BRANCH";
        case errc::self_edge: return "SELF_EDGE";
        case errc::unknown_component: return "UNKNOWN_COMPONENT";
        case errc::unknown_branch: return "UNKNOWN_BRANCH";
        case errc::disconnected: return "DISCONNECTED";
        case errc::negative_multiplicity: return "NEGATIVE_MULTIPLICITY";
        case errc::no_attachment: return "NO_ATTACHMENT";
        case errc::unknown_catalog_name: return "UNKNOWN_CATALOG_NAME";
        case errc::singular: return "SINGULAR";
        case errc::not_negative_definite: return "NOT_NEGATIVE_DEFINITE";
        case errc::non_integral_total_transform: return "NON_INTEGRAL_TOTAL_TRANSFORM";
        case errc::missing_invariant_data: return "MISSING_INVARIANT_DATA";
        case errc::dimension_mismatch: return "DIMENSION_MISMATCH";
        case errc::invalid_argument: return "INVALID_ARGUMENT";
        case errc::invalid_candidate: return "INVALID_CANDIDATE";
        case errc::missing_target: return "MISSING_TARGET";
        case errc::internal: return "INTERNAL";
    }
    return "INTERNAL";
}

// 1-based source position; line == 0 means "not tied to input text".
struct source_pos {
    std::size_t line = 0;
    std::size_t column = 0;
};

class error : public std::runtime_error {
  public:
    error(errc code, std::string message, source_pos pos = {})
        : std::runtime_error(std::move(message)), code_(code), pos_(pos) {}

    errc code() const noexcept { return code_; }
    source_pos pos() const noexcept { return pos_; }
    std::string_view code_name() const noexcept { return errc_name(code_); }

  private:
    errc code_;
    source_pos pos_;
};

}  // namespace nashgate
