#pragma once

#include <string>

#include "mpath/algebra.hpp"
#include "mpath/digraph.hpp"

namespace mpath {

// {"vertices": n, "edges": [[s,t], ...], "mode": "simple" | "multigraph"}
Digraph parse_graph_text(const std::string& text);
Digraph parse_graph_file(const std::string& path);
std::string graph_to_json(const Digraph& g);
std::string graph_to_dot(const Digraph& g);

// {"rank": r, "table": [r^3 entries], "unit": [r entries], "degrees": [r ints]}
// Entries are integers or strings such as "1/2".
Algebra parse_algebra_text(const std::string& text);
Algebra parse_algebra_file(const std::string& path);
// "dual-numbers", "dual-numbers:2", "diagonal:3", "field", or a file path.
Algebra algebra_by_name(const std::string& name);

// "polygon:3", "dandelion:3,2", "diagsquare", ...
GraphFamily parse_family(const std::string& spec);

}  // namespace mpath
