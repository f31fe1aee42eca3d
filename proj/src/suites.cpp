#include "mpath/suites.hpp"

#include <algorithm>

#include "mpath/algebra.hpp"
#include "mpath/cohomology.hpp"
#include "mpath/linear.hpp"
#include "mpath/multipath_complex.hpp"
#include "mpath/structure.hpp"

namespace mpath {

void SuiteResult::check(bool ok, const std::string& what)
{
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    passed = passed && ok;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"linalt", "dandelion", "mv",     "shift",
                                                   "chi-table", "leaf-ses", "wedges"};
    return names;
}

Digraph random_digraph(std::mt19937_64& rng, int max_vertices, int max_edges)
{
    const int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    std::vector<Edge> pairs;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (s != t)
                pairs.push_back({s, t});
    const int m = std::uniform_int_distribution<int>(0, std::min<int>(max_edges, static_cast<int>(pairs.size())))(rng);
    for (int i = 0; i < m; ++i) {
        const int j = std::uniform_int_distribution<int>(i, static_cast<int>(pairs.size()) - 1)(rng);
        std::swap(pairs[static_cast<std::size_t>(i)], pairs[static_cast<std::size_t>(j)]);
    }
    pairs.resize(static_cast<std::size_t>(m));
    return Digraph(n, std::move(pairs));
}

namespace {

std::string table_str(const BettiTable& t)
{
    std::string s = "[";
    for (std::size_t i = 0; i < t.betti.size(); ++i)
        s += (i ? "," : "") + std::to_string(t.betti[i]);
    return s + "]";
}

Digraph fam(FamilyKind k, std::vector<int> p)
{
    return family({k, std::move(p)});
}

BettiTable single(std::size_t degree, std::size_t value)
{
    std::vector<std::size_t> b(degree + 1, 0);
    b[degree] = value;
    return make_table(std::move(b));
}

SuiteResult linalt(const SuiteOptions& o)
{
    SuiteResult r;
    const int max = o.max < 0 ? 10 : o.max;
    for (int n = 0; n <= max; ++n) {
        const BettiTable direct = cohomology(fam(FamilyKind::Alternating, {n}));
        r.check(direct == alternating_table(n), "A_" + std::to_string(n) + " direct " + table_str(direct));
    }
    if (max >= 2)
        r.check(recursion_check_alternating(max).ok(), "mod-3 recursion up to " + std::to_string(max));
    return r;
}

SuiteResult dandelion(const SuiteOptions& o)
{
    SuiteResult r;
    const int max = o.max < 0 ? 7 : o.max;
    for (int n = 0; n <= max; ++n) {
        for (int m = 0; n + m <= max; ++m) {
            if (n + m == 0)
                continue;
            BettiTable expected;
            if (n == 1 || m == 1)
                expected = make_table({});
            else if (n == 0 || m == 0)
                expected = single(1, static_cast<std::size_t>(n + m - 1));
            else
                expected = single(2, static_cast<std::size_t>((n - 1) * (m - 1)));
            const BettiTable got = cohomology(fam(FamilyKind::Dandelion, {n, m}));
            r.check(got == expected, "D_{" + std::to_string(n) + "," + std::to_string(m) + "} " + table_str(got));
        }
    }
    return r;
}

GluingMap identity_map(const Digraph& common)
{
    GluingMap map;
    map.common = common;
    for (int v = 0; v < common.vertex_count(); ++v) {
        map.left.push_back(v);
        map.right.push_back(v);
    }
    return map;
}

SuiteResult mv(const SuiteOptions& o)
{
    SuiteResult r;
    const int max = o.max < 0 ? 6 : o.max;
    // Dandelions split at the centre: base plus one incoming edge per piece.
    for (int k = 2; k <= 3; ++k) {
        for (int m = 0; k + m <= max; ++m) {
            const Digraph g = fam(FamilyKind::Dandelion, {k, m});
            const int centre = k;
            const Decomposition d = decompose_at_vertex(g, centre, BundleKind::TargetBundle);
            Digraph acc = d.pieces[0];
            bool ok = d.partition_ok;
            for (std::size_t h = 1; h < d.pieces.size(); ++h) {
                const MayerVietorisReport rep = mayer_vietoris_check(acc, d.pieces[h], d.base, identity_map(d.base));
                ok = ok && rep.status == MvStatus::Ok;
                acc = rep.glued;
            }
            ok = ok && cohomology(acc) == cohomology(g);
            r.check(ok, "D_{" + std::to_string(k) + "," + std::to_string(m) + "} as an iterated gluing");
        }
    }
    // A_n = cone side (no e2) glued with the A_{n-1} side (no e1) over A_{n-2}.
    for (int n = 2; n <= max + 3; ++n) {
        const Digraph g = fam(FamilyKind::Alternating, {n});
        auto touches = [&g](int i, int v) { return g.edge(i).source == v || g.edge(i).target == v; };
        int e1 = -1, e2 = -1;
        for (int i = 0; i < g.edge_count(); ++i)
            if (touches(i, n))
                e1 = i;
        for (int i = 0; i < g.edge_count(); ++i)
            if (i != e1 && touches(i, n - 1))
                e2 = i;
        const EdgeMask b1 = EdgeMask{1} << e1, b2 = EdgeMask{1} << e2;
        const Digraph left = remove_edges(g, b2), right = remove_edges(g, b1), common = remove_edges(g, b1 | b2);
        // Edge lists of left/right are common's plus one edge; identity on vertices suffices.
        const MayerVietorisReport rep = mayer_vietoris_check(left, right, common, identity_map(common));
        const bool shape = rep.status == MvStatus::Ok && rep.left_betti.is_zero() &&
                           rep.glued_betti == cohomology(g);
        r.check(shape, "A_" + std::to_string(n) + " from its leaf gluing " + table_str(rep.glued_betti));
    }
    {
        // Two copies of I_2 sharing the middle edge do not glue on the poset level.
        const Digraph i2 = fam(FamilyKind::Linear, {2});
        GluingMap map;
        map.common = fam(FamilyKind::Linear, {1});
        map.left = {1, 2};
        map.right = {0, 1};
        const MayerVietorisReport rep = mayer_vietoris_check(i2, i2, map.common, map);
        r.check(rep.status == MvStatus::PosetMismatch, "I_2 glued to I_2 along I_1 reports a poset mismatch");
    }
    return r;
}

SuiteResult shift_suite(const SuiteOptions& o)
{
    SuiteResult r;
    std::vector<std::pair<std::string, Digraph>> named = {
        {"single vertex", Digraph(1, {})},
        {"Q", fam(FamilyKind::DiagonalSquare, {})},
        {"H", build_digraph(6, {{0, 1}, {2, 1}, {3, 4}, {5, 4}, {1, 4}})},
        {"RLRLR", linear_from_word("RLRLR")},
    };
    for (int n = 1; n <= 5; ++n)
        named.emplace_back("I_" + std::to_string(n), fam(FamilyKind::Linear, {n}));
    for (int n = 2; n <= 5; ++n)
        named.emplace_back("sink " + std::to_string(n), fam(FamilyKind::SinkStar, {n}));
    for (int n = 2; n <= 6; ++n)
        named.emplace_back("P_" + std::to_string(n), fam(FamilyKind::Polygon, {n}));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; n + m <= 7; ++m)
            named.emplace_back("D_{" + std::to_string(n) + "," + std::to_string(m) + "}",
                               fam(FamilyKind::Dandelion, {n, m}));
    for (const auto& [name, g] : named)
        r.check(verify_shift_isomorphism(g).ok(), "shift isomorphism on " + name);
    std::mt19937_64 rng(o.seed);
    const int count = o.count < 0 ? 200 : o.count;
    int bad = 0;
    for (int i = 0; i < count; ++i)
        if (!verify_shift_isomorphism(random_digraph(rng, 6, o.max < 0 ? 6 : o.max)).ok())
            ++bad;
    r.check(bad == 0, "shift isomorphism on " + std::to_string(count) + " random digraphs (" +
                          std::to_string(bad) + " mismatches)");
    return r;
}

SuiteResult chi_table(const SuiteOptions& o)
{
    SuiteResult r;
    const int max = o.max < 0 ? 11 : o.max;
    const Algebra a = dual_numbers(1);
    const auto seq = alternating_chi_sequence(max);
    const auto series = alternating_generating_series(max);
    for (int n = 0; n <= max; ++n) {
        const LaurentPolynomial direct = graded_euler(fam(FamilyKind::Alternating, {n}), a).in_alpha;
        r.check(direct == seq[static_cast<std::size_t>(n)] && direct == series[static_cast<std::size_t>(n)],
                "chi(A_" + std::to_string(n) + ") = " + direct.factored("a"));
    }
    const LaurentPolynomial alpha = LaurentPolynomial::monomial(1, 1);
    for (int n = 0; n <= std::min(max, 8); ++n) {
        const LaurentPolynomial expected =
            n == 0 ? alpha : alpha * (alpha - LaurentPolynomial::constant(1)).pow(static_cast<unsigned>(n));
        const LaurentPolynomial direct = graded_euler(fam(FamilyKind::Linear, {n}), a).in_alpha;
        r.check(direct == expected, "chi(I_" + std::to_string(n) + ") = " + direct.factored("a"));
    }
    return r;
}

SuiteResult leaf_ses(const SuiteOptions& o)
{
    SuiteResult r;
    const int max = o.max < 0 ? 7 : o.max;
    for (const Algebra& a : {field_algebra(), dual_numbers(1), diagonal_algebra(3)}) {
        const std::string rank = "rank " + std::to_string(a.rank);
        for (int n = 2; n <= max; ++n) {
            for (FamilyKind kind : {FamilyKind::Linear, FamilyKind::Alternating}) {
                const Digraph g = fam(kind, {n});
                const LeafConfiguration c = leaf_configuration(g, n);
                const LeafReport rep =
                    leaf_sequence_dimension_check(c.whole, c.without_leaf, c.without_pair, a, c.orientation);
                r.check(rep.ok(), std::string(kind == FamilyKind::Linear ? "I_" : "A_") + std::to_string(n) +
                                      " leaf sequence, " + rank);
            }
        }
    }
    return r;
}

SuiteResult wedges(const SuiteOptions& o)
{
    SuiteResult r;
    const int max = o.max < 0 ? 3 : o.max;
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= max; ++n) {
            const BettiTable t = cohomology(wedge_family(k, n));
            r.check(t == single(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(k)),
                    "G_{" + std::to_string(k) + "," + std::to_string(n) + "} " + table_str(t));
        }
    return r;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& options)
{
    if (name == "linalt")
        return linalt(options);
    if (name == "dandelion")
        return dandelion(options);
    if (name == "mv")
        return mv(options);
    if (name == "shift")
        return shift_suite(options);
    if (name == "chi-table")
        return chi_table(options);
    if (name == "leaf-ses")
        return leaf_ses(options);
    if (name == "wedges")
        return wedges(options);
    throw Error(ErrorKind::BadParameters, "unknown suite '" + name + "'");
}

}  // namespace mpath
