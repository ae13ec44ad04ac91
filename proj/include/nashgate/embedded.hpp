#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nashgate/diagnostics.hpp"
#include "nashgate/graph.hpp"

namespace nashgate {

// Strict transform of one branch of the plane-curve germ: multiplicity
// c >= 1 and its attachments (exceptional index, intersection number >= 1).
struct strict_transform {
    std::string id;
    long long mult = 1;
    std::vector<std::pair<std::size_t, long long>> attachments;
    std::optional<long long> mu;  // Milnor number of the branch, user-supplied

    bool operator==(const strict_transform&) const = default;
};

// Embedded-resolution dual graph of a plane curve germ: the exceptional
// configuration plus strict transforms, branch Milnor numbers and pairwise
// intersection multiplicities at the origin.
struct embedded_resolution {
    dual_graph exceptional;
    std::vector<strict_transform> branches;
    // pairwise I_O(g_i, g_j), keyed by branch indices i < j
    std::map<std::pair<std::size_t, std::size_t>, long long> pairwise;

    bool operator==(const embedded_resolution&) const = default;

    std::optional<std::size_t> branch_index(std::string_view id) const {
        for (std::size_t i = 0; i < branches.size(); ++i)
            if (branches[i].id == id) return i;
        return std::nullopt;
    }

    std::optional<long long> pairwise_mult(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        auto it = pairwise.find({a, b});
        if (it == pairwise.end()) return std::nullopt;
        return it->second;
    }

    // Z_b . E_k: total intersection of branch b with exceptional curve k.
    long long attach_mult(std::size_t branch, std::size_t exc) const {
        long long total = 0;
        for (const auto& [e, n] : branches[branch].attachments)
            if (e == exc) total += n;
        return total;
    }
};

inline void validate_embedded(const embedded_resolution& d) {
    for (const auto& c : d.exceptional.components)
        if (c.genus != 0)
            throw error(errc::invalid_argument,
                        "exceptional curves of an embedded resolution are rational; '" +
                            c.id + "' declares genus " + std::to_string(c.genus));
    for (const auto& b : d.branches) {
        if (b.mult < 1)
            throw error(errc::negative_multiplicity,
                        "strict transform '" + b.id + "' must have positive multiplicity");
        if (b.attachments.empty())
            throw error(errc::no_attachment,
                        "strict transform '" + b.id + "' attaches to no exceptional component");
        for (const auto& [e, n] : b.attachments) {
            if (e >= d.exceptional.components.size())
                throw error(errc::unknown_component, "attachment references unknown component");
            if (n < 1)
                throw error(errc::negative_multiplicity,
                            "attachment intersection number must be positive");
        }
    }
    for (const auto& [key, v] : d.pairwise) {
        if (key.first >= key.second || key.second >= d.branches.size())
            throw error(errc::invalid_argument, "pairwise intersection key out of range");
        if (v < 1)
            throw error(errc::negative_multiplicity,
                        "pairwise intersection multiplicity must be positive");
    }
}

}  // namespace nashgate
