#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpath/path_poset.hpp"

namespace mpath {

// One Z/2 label per cover, indexed like PathPoset::covers().
struct SignAssignment {
    std::vector<std::uint8_t> signs;
};

// sign(H < H+e) = #{e' in H : e' before e} mod 2, using the graph's edge order.
SignAssignment canonical_sign(const PathPoset& p, const Digraph& g);

// Same count under an arbitrary edge ranking: rank[e] is the position of edge e.
SignAssignment ranked_sign(const PathPoset& p, const std::vector<int>& rank);

struct SignReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Throws MissingCover when s does not label every cover.
SignReport verify_sign(const PathPoset& p, const SignAssignment& s);

}  // namespace mpath
