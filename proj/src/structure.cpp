#include "mpath/structure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mpath {

namespace {

using MaskSet = std::set<EdgeMask>;

MaskSet poset_set(const Digraph& g, std::size_t cap = kDefaultSizeCap)
{
    const PathPoset p = enumerate_path_poset(g, cap);
    return MaskSet(p.masks().begin(), p.masks().end());
}

EdgeMask remap(EdgeMask m, const std::vector<int>& edge_map)
{
    EdgeMask out = 0;
    for (std::size_t i = 0; i < edge_map.size(); ++i)
        if ((m >> i) & 1U)
            out |= EdgeMask{1} << edge_map[i];
    return out;
}

MaskSet remap_all(const MaskSet& s, const std::vector<int>& edge_map)
{
    MaskSet out;
    for (EdgeMask m : s)
        out.insert(remap(m, edge_map));
    return out;
}

Decomposition split(const Digraph& g, int v, BundleKind kind)
{
    if (v < 0 || v >= g.vertex_count())
        throw Error(ErrorKind::VertexOutOfRange, "no vertex " + std::to_string(v));
    Decomposition d;
    d.vertex = v;
    d.kind = kind;
    EdgeMask bundle = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if ((kind == BundleKind::TargetBundle && e.target == v) || (kind == BundleKind::SourceBundle && e.source == v)) {
            d.bundle_edges.push_back(i);
            bundle |= EdgeMask{1} << i;
        }
    }
    if (d.bundle_edges.size() < 2)
        throw Error(ErrorKind::NotDecomposable, "vertex " + std::to_string(v) + " has fewer than two " +
                                                    (kind == BundleKind::TargetBundle ? "incoming" : "outgoing") +
                                                    " edges");
    d.base = remove_edges(g, bundle);
    for (int h : d.bundle_edges) {
        std::vector<Edge> edges = d.base.edges();
        edges.push_back(g.edge(h));
        d.pieces.emplace_back(g.vertex_count(), std::move(edges), g.mode());
    }
    return d;
}

void check_partition(const Digraph& g, Decomposition& d, std::size_t cap)
{
    std::vector<int> base_to_g;
    for (int i = 0; i < g.edge_count(); ++i)
        if (std::find(d.bundle_edges.begin(), d.bundle_edges.end(), i) == d.bundle_edges.end())
            base_to_g.push_back(i);

    const MaskSet whole = poset_set(g, cap);
    const MaskSet base = remap_all(poset_set(d.base, cap), base_to_g);
    MaskSet rebuilt = base;
    std::size_t total = base.size();
    for (std::size_t h = 0; h < d.pieces.size(); ++h) {
        std::vector<int> piece_to_g = base_to_g;
        piece_to_g.push_back(d.bundle_edges[h]);
        const EdgeMask bit = EdgeMask{1} << d.bundle_edges[h];
        for (EdgeMask m : remap_all(poset_set(d.pieces[h], cap), piece_to_g)) {
            if (base.count(m))
                continue;
            if (!(m & bit))
                d.partition_issues.push_back("piece " + std::to_string(h) + " adds " + mask_label(m, g.edge_count()) +
                                             " without its bundle edge");
            rebuilt.insert(m);
            ++total;
        }
    }
    if (total != rebuilt.size())
        d.partition_issues.push_back("pieces overlap outside the base");
    if (rebuilt != whole)
        d.partition_issues.push_back("union of pieces differs from the path poset");
    d.partition_ok = d.partition_issues.empty();
}

}  // namespace

Decomposition decompose_at_vertex(const Digraph& g, int v, BundleKind kind, std::size_t cap)
{
    Decomposition d = split(g, v, kind);
    check_partition(g, d, cap);
    return d;
}

Decomposition decompose_at_vertex(const Digraph& g, int v, std::size_t cap)
{
    if (v >= 0 && v < g.vertex_count() && g.in_degree(v) < 2 && g.out_degree(v) >= 2)
        return decompose_at_vertex(g, v, BundleKind::SourceBundle, cap);
    return decompose_at_vertex(g, v, BundleKind::TargetBundle, cap);
}

std::optional<int> detect_cone_edge(const Digraph& g)
{
    for (int i = 0; i < g.edge_count(); ++i) {
        const int a = g.edge(i).source, b = g.edge(i).target;
        bool ok = true;
        for (int j = 0; j < g.edge_count() && ok; ++j) {
            if (j == i)
                continue;
            if (g.edge(j).source == a || g.edge(j).target == b)
                ok = false;
        }
        if (ok && !coherent_cycle_through(g, i))
            return i;
    }
    return std::nullopt;
}

bool verify_cone(const Digraph& g, int edge, std::size_t cap)
{
    const MaskSet whole = poset_set(g, cap);
    std::vector<int> to_g;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != edge)
            to_g.push_back(i);
    const MaskSet rest = remap_all(poset_set(remove_edges(g, EdgeMask{1} << edge), cap), to_g);
    if (whole.size() != 2 * rest.size())
        return false;
    for (EdgeMask m : rest)
        if (!whole.count(m) || !whole.count(m | (EdgeMask{1} << edge)))
            return false;
    return true;
}

namespace {

std::string describe(const Digraph& g)
{
    std::string s = std::to_string(g.vertex_count()) + ":";
    for (const Edge& e : g.edges())
        s += " " + std::to_string(e.source) + ">" + std::to_string(e.target);
    return s;
}

Digraph strip_isolated(const Digraph& g)
{
    std::vector<int> lonely;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.valence(v) == 0)
            lonely.push_back(v);
    return lonely.empty() ? g : remove_vertices(g, lonely);
}

struct Prover {
    int depth_cap;
    std::map<std::string, std::pair<bool, std::vector<TraceStep>>> memo;

    bool prove(const Digraph& input, int depth, std::vector<TraceStep>& trace)
    {
        const Digraph g = strip_isolated(input);
        const std::string key = describe(g);
        if (auto it = memo.find(key); it != memo.end()) {
            if (it->second.first)
                for (TraceStep step : it->second.second) {
                    step.depth += depth;
                    trace.push_back(step);
                }
            return it->second.first;
        }
        std::vector<TraceStep> local;
        const bool ok = attempt(g, depth, local);
        std::vector<TraceStep> relative = local;
        for (auto& step : relative)
            step.depth -= depth;
        if (depth < depth_cap || ok)
            memo[key] = {ok, relative};
        if (ok)
            trace.insert(trace.end(), local.begin(), local.end());
        return ok;
    }

    bool attempt(const Digraph& g, int depth, std::vector<TraceStep>& trace)
    {
        if (g.edge_count() == 0)
            return false;
        if (depth > depth_cap) {
            trace.push_back({depth, "depth-cap", describe(g)});
            return false;
        }
        const auto comps = components(g, g.full_mask());
        if (comps.size() > 1) {
            for (const auto& comp : comps) {
                std::vector<int> others;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!std::binary_search(comp.begin(), comp.end(), v))
                        others.push_back(v);
                const Digraph part = remove_vertices(g, others);
                std::vector<TraceStep> sub;
                if (prove(part, depth + 1, sub)) {
                    trace.push_back({depth, "disjoint-union", "component " + describe(part) + " is acyclic"});
                    trace.insert(trace.end(), sub.begin(), sub.end());
                    return true;
                }
            }
            return false;
        }
        if (auto e = detect_cone_edge(g)) {
            trace.push_back({depth, "cone-edge",
                             "edge " + std::to_string(*e) + " (" + std::to_string(g.edge(*e).source) + "->" +
                                 std::to_string(g.edge(*e).target) + ") in " + describe(g)});
            return true;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (BundleKind kind : {BundleKind::TargetBundle, BundleKind::SourceBundle}) {
                const int count = kind == BundleKind::TargetBundle ? g.in_degree(v) : g.out_degree(v);
                if (count < 2)
                    continue;
                const Decomposition d = split(g, v, kind);
                std::vector<TraceStep> sub;
                bool all = prove(d.base, depth + 1, sub);
                for (std::size_t h = 0; all && h < d.pieces.size(); ++h)
                    all = prove(d.pieces[h], depth + 1, sub);
                if (all) {
                    trace.push_back({depth, "vertex-decomposition",
                                     std::string(kind == BundleKind::TargetBundle ? "incoming" : "outgoing") +
                                         " bundle of " + std::to_string(count) + " at vertex " + std::to_string(v) +
                                         " in " + describe(g)});
                    trace.insert(trace.end(), sub.begin(), sub.end());
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

AcyclicityReport acyclicity_report(const Digraph& g, int depth_cap)
{
    Prover prover{depth_cap, {}};
    AcyclicityReport report;
    if (prover.prove(g, 0, report.trace))
        report.verdict = Verdict::ProvedAcyclic;
    else
        report.trace.clear();
    return report;
}

std::string report_text(const AcyclicityReport& r)
{
    std::ostringstream os;
    os << (r.verdict == Verdict::ProvedAcyclic ? "proved acyclic" : "inconclusive") << "\n";
    for (const auto& step : r.trace)
        os << std::string(static_cast<std::size_t>(2 * step.depth), ' ') << step.criterion << ": " << step.detail
           << "\n";
    return os.str();
}

std::string report_json(const AcyclicityReport& r)
{
    nlohmann::json j;
    j["verdict"] = r.verdict == Verdict::ProvedAcyclic ? "ProvedAcyclic" : "Inconclusive";
    j["trace"] = nlohmann::json::array();
    for (const auto& step : r.trace)
        j["trace"].push_back({{"depth", step.depth}, {"criterion", step.criterion}, {"detail", step.detail}});
    return j.dump(2);
}

MayerVietorisReport mayer_vietoris_check(const Digraph& g1, const Digraph& g2, const Digraph& common,
                                         const GluingMap& map, const FieldSpec& f)
{
    if (!(map.common == common))
        throw Error(ErrorKind::NotRegularMorphism, "gluing map is based on a different common graph");
    const GluingResult glued = glue_with_maps(g1, g2, map);
    MayerVietorisReport report;
    report.glued = glued.graph;

    const MaskSet whole = poset_set(glued.graph);
    const MaskSet left = remap_all(poset_set(g1), glued.left_edges);
    const MaskSet right = remap_all(poset_set(g2), glued.right_edges);
    EdgeMask shared = 0;
    for (int e : glued.left_edges)
        if (std::find(glued.right_edges.begin(), glued.right_edges.end(), e) != glued.right_edges.end())
            shared |= EdgeMask{1} << e;

    MaskSet united = left, overlap, on_shared;
    united.insert(right.begin(), right.end());
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::inserter(overlap, overlap.end()));
    for (EdgeMask m : left)
        if ((m & ~shared) == 0)
            on_shared.insert(m);
    if (united != whole)
        report.issues.push_back("path poset of the glued graph is not the union of the two posets");
    if (overlap != on_shared || on_shared.size() != poset_set(common).size())
        report.issues.push_back("the two posets do not meet in the poset of the common graph");
    if (!report.issues.empty()) {
        report.status = MvStatus::PosetMismatch;
        return report;
    }

    const CochainComplex cg = build_field_complex(glued.graph, f), c1 = build_field_complex(g1, f),
                         c2 = build_field_complex(g2, f), c0 = build_field_complex(common, f);
    auto dim = [](const CochainComplex& c, std::size_t n) { return n < c.dims.size() ? static_cast<long>(c.dims[n]) : 0L; };
    const std::size_t top = std::max({cg.dims.size(), c1.dims.size(), c2.dims.size(), c0.dims.size()}) + 1;
    for (std::size_t n = 0; n < top; ++n)
        if (dim(cg, n) != dim(c1, n) + dim(c2, n) - dim(c0, n))
            report.issues.push_back("dimension identity fails in degree " + std::to_string(n));

    report.glued_betti = betti_numbers(cg);
    report.left_betti = betti_numbers(c1);
    report.right_betti = betti_numbers(c2);
    report.common_betti = betti_numbers(c0);
    auto b = [](const BettiTable& t, long n) { return n < 0 ? 0L : static_cast<long>(t.at(static_cast<std::size_t>(n))); };
    long alternating = 0;
    for (long i = 0; i < static_cast<long>(top); ++i) {
        const long term = b(report.glued_betti, i) - b(report.left_betti, i) - b(report.right_betti, i) +
                          b(report.common_betti, i);
        alternating += (i % 2 == 0 ? 1 : -1) * term;
        // Exactness of ... -> H^{i-1}(common) -> H^i(glued) -> H^i(g1)+H^i(g2) -> H^i(common) -> ...
        const long mid = b(report.left_betti, i) + b(report.right_betti, i);
        if (b(report.glued_betti, i) > b(report.common_betti, i - 1) + mid ||
            mid > b(report.glued_betti, i) + b(report.common_betti, i) ||
            b(report.common_betti, i) > mid + b(report.glued_betti, i + 1))
            report.issues.push_back("long exact sequence violated around degree " + std::to_string(i));
    }
    if (alternating != 0)
        report.issues.push_back("alternating rank sum is " + std::to_string(alternating));
    if (report.left_betti.is_zero() && report.right_betti.is_zero()) {
        for (long n = 0; n < static_cast<long>(top); ++n)
            if (b(report.glued_betti, n) != b(report.common_betti, n - 1))
                report.issues.push_back("acyclic pieces but degree " + std::to_string(n) + " is not shifted");
    }
    if (!report.issues.empty())
        report.status = MvStatus::IdentityFailure;
    return report;
}

Digraph suspend(const Digraph& g, int w)
{
    if (w < 0 || w >= g.vertex_count() || g.valence(w) != 1)
        throw Error(ErrorKind::NotUnivalent, "vertex " + std::to_string(w) + " does not have exactly one edge");
    const bool w_is_source = g.out_degree(w) == 1;
    const int u1 = g.vertex_count(), u2 = g.vertex_count() + 1;
    std::vector<Edge> edges = g.edges();
    if (w_is_source) {
        edges.push_back({u1, w});
        edges.push_back({u2, w});
    } else {
        edges.push_back({w, u1});
        edges.push_back({w, u2});
    }
    return Digraph(g.vertex_count() + 2, std::move(edges), g.mode());
}

Digraph wedge_family(int k, int n)
{
    if (k < 1 || n < 0)
        throw Error(ErrorKind::BadParameters, "wedge family needs k >= 1 and n >= 0");
    if (n == 0)
        return family({FamilyKind::Dandelion, {k + 1, 0}});
    if (n == 1)
        return family({FamilyKind::Dandelion, {k + 1, 2}});
    const Digraph g = wedge_family(k, n - 1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.valence(v) == 1)
            return suspend(g, v);
    throw Error(ErrorKind::NotUnivalent, "no univalent vertex to suspend at");
}

}  // namespace mpath
