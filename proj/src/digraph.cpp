#include "mpath/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "mpath/structure.hpp"

namespace mpath {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotRegularMorphism: return "NotRegularMorphism";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::MissingCover: return "MissingCover";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::UngradedAlgebra: return "UngradedAlgebra";
    case ErrorKind::ConfigurationMismatch: return "ConfigurationMismatch";
    case ErrorKind::NotDecomposable: return "NotDecomposable";
    case ErrorKind::NotUnivalent: return "NotUnivalent";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Digraph::Digraph(int vertex_count, std::vector<Edge> edges, GraphMode mode)
    : vertex_count_(vertex_count), edges_(std::move(edges)), mode_(mode)
{
    if (vertex_count_ < 0)
        throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.source < 0 || e.target < 0 || e.source >= vertex_count_ || e.target >= vertex_count_)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge " + std::to_string(i) + " has an endpoint outside 0.." +
                            std::to_string(vertex_count_ - 1),
                        i);
        if (e.source == e.target)
            throw Error(ErrorKind::SelfLoop, "edge " + std::to_string(i) + " is a self-loop", i);
        if (mode_ == GraphMode::Simple && !seen.insert({e.source, e.target}).second)
            throw Error(ErrorKind::DuplicateEdge,
                        "edge " + std::to_string(i) + " repeats (" + std::to_string(e.source) + "," +
                            std::to_string(e.target) + ")",
                        i);
    }
}

int Digraph::in_degree(int v) const
{
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.target == v; }));
}

int Digraph::out_degree(int v) const
{
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.source == v; }));
}

EdgeMask Digraph::full_mask() const
{
    const int m = edge_count();
    if (m >= kMaxEdges)
        return ~EdgeMask{0};
    return (EdgeMask{1} << m) - 1;
}

Digraph build_digraph(int vertex_count, const std::vector<std::pair<int, int>>& edges, GraphMode mode)
{
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (const auto& [s, t] : edges)
        list.push_back({s, t});
    return Digraph(vertex_count, std::move(list), mode);
}

Digraph reverse_orientation(const Digraph& g)
{
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges())
        edges.push_back({e.target, e.source});
    return Digraph(g.vertex_count(), std::move(edges), g.mode());
}

Digraph disjoint_union(const Digraph& g1, const Digraph& g2)
{
    std::vector<Edge> edges = g1.edges();
    const int shift = g1.vertex_count();
    for (const Edge& e : g2.edges())
        edges.push_back({e.source + shift, e.target + shift});
    const GraphMode mode =
        (g1.mode() == GraphMode::Multigraph || g2.mode() == GraphMode::Multigraph) ? GraphMode::Multigraph
                                                                                   : GraphMode::Simple;
    return Digraph(g1.vertex_count() + g2.vertex_count(), std::move(edges), mode);
}

Digraph reorder_edges(const Digraph& g, const std::vector<int>& order)
{
    std::vector<Edge> edges;
    edges.reserve(order.size());
    for (int i : order) {
        if (i < 0 || i >= g.edge_count())
            throw Error(ErrorKind::BadParameters, "edge index out of range in reordering");
        edges.push_back(g.edge(i));
    }
    return Digraph(g.vertex_count(), std::move(edges), g.mode());
}

Digraph remove_vertices(const Digraph& g, const std::vector<int>& vertices)
{
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw Error(ErrorKind::VertexOutOfRange, "cannot remove vertex " + std::to_string(v));
        relabel[static_cast<std::size_t>(v)] = -1;
    }
    int next = 0;
    for (int& r : relabel)
        if (r == 0)
            r = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int s = relabel[static_cast<std::size_t>(e.source)];
        const int t = relabel[static_cast<std::size_t>(e.target)];
        if (s >= 0 && t >= 0)
            edges.push_back({s, t});
    }
    return Digraph(next, std::move(edges), g.mode());
}

Digraph remove_edges(const Digraph& g, EdgeMask removed)
{
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!((removed >> i) & 1U))
            edges.push_back(g.edge(i));
    return Digraph(g.vertex_count(), std::move(edges), g.mode());
}

namespace {

void check_embedding(const Digraph& common, const Digraph& target, const std::vector<int>& map,
                     const char* side, std::vector<int>& edge_image)
{
    if (static_cast<int>(map.size()) != common.vertex_count())
        throw Error(ErrorKind::NotRegularMorphism, std::string(side) + " map has the wrong length");
    std::set<int> used;
    for (int v : map) {
        if (v < 0 || v >= target.vertex_count())
            throw Error(ErrorKind::NotRegularMorphism, std::string(side) + " map leaves the target graph");
        if (!used.insert(v).second)
            throw Error(ErrorKind::NotRegularMorphism, std::string(side) + " map is not injective");
    }
    // Parallel common edges must land on distinct target edges.
    std::vector<bool> taken(static_cast<std::size_t>(target.edge_count()), false);
    edge_image.assign(static_cast<std::size_t>(common.edge_count()), -1);
    for (int i = 0; i < common.edge_count(); ++i) {
        const Edge& e = common.edge(i);
        const int s = map[static_cast<std::size_t>(e.source)];
        const int t = map[static_cast<std::size_t>(e.target)];
        for (int j = 0; j < target.edge_count(); ++j) {
            if (!taken[static_cast<std::size_t>(j)] && target.edge(j).source == s && target.edge(j).target == t) {
                taken[static_cast<std::size_t>(j)] = true;
                edge_image[static_cast<std::size_t>(i)] = j;
                break;
            }
        }
        if (edge_image[static_cast<std::size_t>(i)] < 0)
            throw Error(ErrorKind::NotRegularMorphism,
                        std::string(side) + " map does not send common edge " + std::to_string(i) + " to an edge",
                        static_cast<std::size_t>(i));
    }
}

}  // namespace

GluingResult glue_with_maps(const Digraph& g1, const Digraph& g2, const GluingMap& map)
{
    std::vector<int> left_edge_image, right_edge_image;
    check_embedding(map.common, g1, map.left, "left", left_edge_image);
    check_embedding(map.common, g2, map.right, "right", right_edge_image);

    GluingResult out;
    out.left_vertices.resize(static_cast<std::size_t>(g1.vertex_count()));
    std::iota(out.left_vertices.begin(), out.left_vertices.end(), 0);
    out.right_vertices.assign(static_cast<std::size_t>(g2.vertex_count()), -1);
    for (int c = 0; c < map.common.vertex_count(); ++c)
        out.right_vertices[static_cast<std::size_t>(map.right[static_cast<std::size_t>(c)])] =
            map.left[static_cast<std::size_t>(c)];
    int next = g1.vertex_count();
    for (int& v : out.right_vertices)
        if (v < 0)
            v = next++;

    std::vector<Edge> edges = g1.edges();
    out.left_edges.resize(static_cast<std::size_t>(g1.edge_count()));
    std::iota(out.left_edges.begin(), out.left_edges.end(), 0);
    out.right_edges.assign(static_cast<std::size_t>(g2.edge_count()), -1);
    for (int c = 0; c < map.common.edge_count(); ++c)
        out.right_edges[static_cast<std::size_t>(right_edge_image[static_cast<std::size_t>(c)])] =
            left_edge_image[static_cast<std::size_t>(c)];
    for (int j = 0; j < g2.edge_count(); ++j) {
        if (out.right_edges[static_cast<std::size_t>(j)] >= 0)
            continue;
        out.right_edges[static_cast<std::size_t>(j)] = static_cast<int>(edges.size());
        edges.push_back({out.right_vertices[static_cast<std::size_t>(g2.edge(j).source)],
                         out.right_vertices[static_cast<std::size_t>(g2.edge(j).target)]});
    }
    const GraphMode mode =
        (g1.mode() == GraphMode::Multigraph || g2.mode() == GraphMode::Multigraph) ? GraphMode::Multigraph
                                                                                   : GraphMode::Simple;
    out.graph = Digraph(next, std::move(edges), mode);
    return out;
}

Digraph glue(const Digraph& g1, const Digraph& g2, const GluingMap& map)
{
    return glue_with_maps(g1, g2, map).graph;
}

bool is_multipath(const Digraph& g, EdgeMask edges)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> next(n, -1);
    std::vector<char> has_in(n, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!((edges >> i) & 1U))
            continue;
        const Edge& e = g.edge(i);
        if (next[static_cast<std::size_t>(e.source)] >= 0 || has_in[static_cast<std::size_t>(e.target)])
            return false;
        next[static_cast<std::size_t>(e.source)] = e.target;
        has_in[static_cast<std::size_t>(e.target)] = 1;
    }
    // Degrees are at most one, so every component is a path or a cycle; a path has a start.
    std::vector<char> seen(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (has_in[v])
            continue;
        for (int w = static_cast<int>(v); w >= 0 && !seen[static_cast<std::size_t>(w)];
             w = next[static_cast<std::size_t>(w)])
            seen[static_cast<std::size_t>(w)] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool coherent_cycle_through(const Digraph& g, int edge)
{
    if (edge < 0 || edge >= g.edge_count())
        throw Error(ErrorKind::BadParameters, "edge index out of range");
    // The edge closes a cycle iff its source is reachable from its target.
    const Edge& e = g.edge(edge);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> stack{e.target};
    seen[static_cast<std::size_t>(e.target)] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (v == e.source)
            return true;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (i == edge || g.edge(i).source != v)
                continue;
            const int w = g.edge(i).target;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

std::vector<std::vector<int>> components(const Digraph& g, EdgeMask edges)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        if (!((edges >> i) & 1U))
            continue;
        const int a = find(g.edge(i).source);
        const int b = find(g.edge(i).target);
        if (a != b)
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const int r = find(static_cast<int>(v));
        if (slot[static_cast<std::size_t>(r)] < 0) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(static_cast<int>(v));
    }
    return out;
}

namespace {

Digraph sorted_graph(int vertex_count, std::vector<Edge> edges)
{
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    return Digraph(vertex_count, std::move(edges));
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::BadParameters, what);
}

int param(const GraphFamily& spec, std::size_t i)
{
    return spec.parameters[i];
}

}  // namespace

Digraph family(const GraphFamily& spec)
{
    auto arity = [&](std::size_t k, const char* name) {
        require(spec.parameters.size() == k, std::string(name) + " takes " + std::to_string(k) + " parameter(s)");
        for (int p : spec.parameters)
            require(p >= 0, std::string(name) + " parameters must be non-negative");
    };
    std::vector<Edge> edges;
    switch (spec.kind) {
    case FamilyKind::Linear: {
        arity(1, "linear");
        const int n = param(spec, 0);
        for (int i = 0; i < n; ++i)
            edges.push_back({i, i + 1});
        return sorted_graph(n + 1, edges);
    }
    case FamilyKind::Polygon: {
        arity(1, "polygon");
        const int n = param(spec, 0);
        require(n >= 1, "polygon needs n >= 1");
        for (int i = 0; i < n; ++i)
            edges.push_back({i, i + 1});
        edges.push_back({n, 0});
        return sorted_graph(n + 1, edges);
    }
    case FamilyKind::Alternating: {
        arity(1, "alternating");
        const int n = param(spec, 0);
        for (int i = 1; i <= n; ++i)
            edges.push_back(i % 2 == 1 ? Edge{i - 1, i} : Edge{i, i - 1});
        return sorted_graph(n + 1, edges);
    }
    case FamilyKind::Dandelion: {
        // w_1..w_n are 0..n-1, the centre is n, x_1..x_m are n+1..n+m.
        arity(2, "dandelion");
        const int n = param(spec, 0), m = param(spec, 1);
        for (int i = 0; i < n; ++i)
            edges.push_back({i, n});
        for (int j = 0; j < m; ++j)
            edges.push_back({n, n + 1 + j});
        return sorted_graph(n + m + 1, edges);
    }
    case FamilyKind::HGraph: {
        // w_1..w_n, then the bridge v0 -> v1, then x_1..x_m.
        arity(2, "hgraph");
        const int n = param(spec, 0), m = param(spec, 1);
        for (int i = 0; i < n; ++i)
            edges.push_back({i, n});
        edges.push_back({n, n + 1});
        for (int j = 0; j < m; ++j)
            edges.push_back({n + 1, n + 2 + j});
        return sorted_graph(n + m + 2, edges);
    }
    case FamilyKind::SinkStar: {
        arity(1, "sink");
        return family({FamilyKind::Dandelion, {param(spec, 0), 0}});
    }
    case FamilyKind::SourceStar: {
        arity(1, "source");
        return family({FamilyKind::Dandelion, {0, param(spec, 0)}});
    }
    case FamilyKind::WedgeFamily: {
        arity(2, "wedge");
        require(param(spec, 0) >= 1, "wedge needs k >= 1");
        return wedge_family(param(spec, 0), param(spec, 1));
    }
    case FamilyKind::Ladder: {
        arity(1, "ladder");
        const int n = param(spec, 0);
        require(n % 2 == 1, "ladder needs an odd n");
        for (int i = 0; i <= (n - 1) / 2; ++i)
            edges.push_back({2 * i + 1, 2 * i});
        for (int i = 0; i <= (n - 3) / 2; ++i) {
            edges.push_back({2 * i + 3, 2 * i + 1});
            edges.push_back({2 * i, 2 * i + 2});
        }
        return sorted_graph(n + 1, edges);
    }
    case FamilyKind::DiagonalSquare: {
        arity(0, "diagsquare");
        return sorted_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    }
    }
    throw Error(ErrorKind::BadParameters, "unknown family");
}

}  // namespace mpath
