/**
 * Finite directed (multi)graphs with an ordered edge list.
 *
 * Vertices are 0..vertex_count-1. The edge order is observable: it fixes the
 * sign assignment used by every cochain complex built on top of a graph.
 * Edge subsets are passed around as 64-bit masks, bit i <-> edge i.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mpath/error.hpp"

namespace mpath {

using EdgeMask = std::uint64_t;
inline constexpr int kMaxEdges = 64;

struct Edge {
    int source = 0;
    int target = 0;
    bool operator==(const Edge&) const = default;
};

enum class GraphMode { Simple, Multigraph };

class Digraph {
public:
    Digraph() = default;

    // Throws SelfLoop, DuplicateEdge (simple mode only) or VertexOutOfRange.
    Digraph(int vertex_count, std::vector<Edge> edges, GraphMode mode = GraphMode::Simple);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    GraphMode mode() const { return mode_; }

    int in_degree(int v) const;
    int out_degree(int v) const;
    int valence(int v) const { return in_degree(v) + out_degree(v); }

    EdgeMask full_mask() const;

    bool operator==(const Digraph&) const = default;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    GraphMode mode_ = GraphMode::Simple;
};

Digraph build_digraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                      GraphMode mode = GraphMode::Simple);

Digraph reverse_orientation(const Digraph& g);

// g2's vertices are shifted by g1.vertex_count(); edges are g1's then g2's.
Digraph disjoint_union(const Digraph& g1, const Digraph& g2);

// Keeps the edges listed in `order` (by index) in that order.
Digraph reorder_edges(const Digraph& g, const std::vector<int>& order);

// Drops the given vertices and every incident edge; survivors keep relative order.
Digraph remove_vertices(const Digraph& g, const std::vector<int>& vertices);

Digraph remove_edges(const Digraph& g, EdgeMask edges);

struct GluingMap {
    Digraph common;
    std::vector<int> left;   // common vertex -> g1 vertex
    std::vector<int> right;  // common vertex -> g2 vertex
};

struct GluingResult {
    Digraph graph;
    std::vector<int> left_vertices;   // g1 vertex -> glued vertex
    std::vector<int> right_vertices;  // g2 vertex -> glued vertex
    std::vector<int> left_edges;      // g1 edge -> glued edge
    std::vector<int> right_edges;     // g2 edge -> glued edge
};

// Pushout of g1 <- common -> g2. Vertices of g1 come first, then the
// unidentified vertices of g2 in order; edges likewise.
GluingResult glue_with_maps(const Digraph& g1, const Digraph& g2, const GluingMap& map);
Digraph glue(const Digraph& g1, const Digraph& g2, const GluingMap& map);

bool is_multipath(const Digraph& g, EdgeMask edges);
bool coherent_cycle_through(const Digraph& g, int edge);

// Weakly connected components over the edges in `edges`, each sorted, ordered by minimal vertex.
std::vector<std::vector<int>> components(const Digraph& g, EdgeMask edges);

enum class FamilyKind {
    Linear,
    Polygon,
    Alternating,
    Dandelion,
    HGraph,
    SinkStar,
    SourceStar,
    WedgeFamily,
    Ladder,
    DiagonalSquare,
};

struct GraphFamily {
    FamilyKind kind = FamilyKind::Linear;
    std::vector<int> parameters;
};

Digraph family(const GraphFamily& spec);

}  // namespace mpath
