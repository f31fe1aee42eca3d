// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mpath/algebra.hpp"
#include "mpath/cohomology.hpp"
#include "mpath/linear.hpp"
#include "mpath/multipath_complex.hpp"
#include "mpath/structure.hpp"
#include "mpath/suites.hpp"

using namespace mpath;

namespace {

struct Tally {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures.size() < 5)
            failures.push_back(what);
        else if (!ok)
            failures.push_back("");
    }
};

Digraph fam(FamilyKind k, std::vector<int> p = {})
{
    return family({k, std::move(p)});
}

BettiTable single(std::size_t degree, std::size_t value)
{
    std::vector<std::size_t> b(degree + 1, 0);
    b[degree] = value;
    return make_table(b);
}

std::string str(const BettiTable& t)
{
    std::string s = "[";
    for (std::size_t i = 0; i < t.betti.size(); ++i)
        s += (i ? "," : "") + std::to_string(t.betti[i]);
    return s + "]";
}

Digraph h_shape()
{
    return build_digraph(6, {{0, 1}, {2, 1}, {3, 4}, {5, 4}, {1, 4}});
}

std::vector<std::pair<std::string, Digraph>> named_instances()
{
    std::vector<std::pair<std::string, Digraph>> out = {
        {"single vertex", Digraph(1, {})},
        {"RLRLR", linear_from_word("RLRLR")},
        {"H", h_shape()},
        {"Q", fam(FamilyKind::DiagonalSquare)},
    };
    for (int n = 1; n <= 5; ++n)
        out.emplace_back("I_" + std::to_string(n), fam(FamilyKind::Linear, {n}));
    for (int n = 2; n <= 5; ++n)
        out.emplace_back("sink_" + std::to_string(n), fam(FamilyKind::SinkStar, {n}));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; n + m <= 7; ++m)
            out.emplace_back("D_" + std::to_string(n) + "," + std::to_string(m), fam(FamilyKind::Dandelion, {n, m}));
    for (int n = 2; n <= 6; ++n)
        out.emplace_back("P_" + std::to_string(n), fam(FamilyKind::Polygon, {n}));
    return out;
}

// Criterion 1: the table of small examples.
void table_examples(Tally& t)
{
    auto expect = [&t](const std::string& name, const Digraph& g, const BettiTable& want) {
        const BettiTable got = cohomology(g);
        t.expect(got == want, name + " gave " + str(got));
    };
    expect("single vertex", Digraph(1, {}), single(0, 1));
    for (int n = 1; n <= 5; ++n)
        expect("I_" + std::to_string(n), fam(FamilyKind::Linear, {n}), make_table({}));
    expect("RLRLR", linear_from_word("RLRLR"), single(2, 1));
    for (int n = 2; n <= 5; ++n)
        expect("sink_" + std::to_string(n), fam(FamilyKind::SinkStar, {n}), single(1, static_cast<std::size_t>(n - 1)));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; n + m <= 7; ++m)
            expect("D_" + std::to_string(n) + "," + std::to_string(m), fam(FamilyKind::Dandelion, {n, m}),
                   single(2, static_cast<std::size_t>((n - 1) * (m - 1))));
    expect("H", h_shape(), single(2, 2));
    expect("Q", fam(FamilyKind::DiagonalSquare), make_table({0, 0, 1, 1}));
    for (int n = 2; n <= 6; ++n)
        expect("P_" + std::to_string(n), fam(FamilyKind::Polygon, {n}), single(static_cast<std::size_t>(n), 1));
}

// Criterion 2: alternating graphs against the mod-3 table.
void alternating(Tally& t)
{
    for (int n = 0; n <= 12; ++n) {
        BettiTable want;
        for (std::size_t k = 0; k <= 5; ++k) {
            const int kk = static_cast<int>(k);
            if (n == 3 * (kk - 1) + 2 || n == 3 * kk)
                want = single(k, 1);
        }
        const BettiTable got = cohomology(fam(FamilyKind::Alternating, {n}));
        t.expect(got == want, "A_" + std::to_string(n) + " gave " + str(got));
    }
}

// Criterion 3: closed form versus direct computation on every orientation word.
void linear_words(Tally& t)
{
    for (int n = 0; n <= 10; ++n)
        for (const std::string& w : all_words(n)) {
            const BettiTable direct = cohomology(linear_from_word(w));
            t.expect(closed_form_word(w) == direct, w + " direct " + str(direct));
        }
}

// Criterion 4: multipath cohomology is the shifted reduced cohomology of X(G).
void simplicial(Tally& t)
{
    for (const auto& [name, g] : named_instances())
        t.expect(verify_shift_isomorphism(g).ok(), name);
    std::mt19937_64 rng(20240521);
    for (int i = 0; i < 200; ++i) {
        const Digraph g = random_digraph(rng, 7, 6);
        t.expect(verify_shift_isomorphism(g).ok(), "random instance " + std::to_string(i));
    }
}

LaurentPolynomial from_descending(const std::vector<long>& coeffs)
{
    LaurentPolynomial p;
    const int top = static_cast<int>(coeffs.size()) - 1;
    for (int i = 0; i <= top; ++i)
        p += LaurentPolynomial::monomial(coeffs[static_cast<std::size_t>(i)], top - i);
    return p;
}

// Criterion 5: graded Euler characteristics.
void euler(Tally& t)
{
    const LaurentPolynomial a = LaurentPolynomial::monomial(1, 1);
    // alpha power and remaining factors, coefficients in descending order.
    const std::vector<std::pair<unsigned, std::vector<std::vector<long>>>> table = {
        {1, {}},
        {1, {{1, -1}}},
        {2, {{1, -2}}},
        {2, {{1, -3, 1}}},
        {3, {{1, -1}, {1, -3}}},
        {3, {{1, -5, 6, -1}}},
        {4, {{1, -2}, {1, -4, 2}}},
        {4, {{1, -1}, {1, -6, 9, -1}}},
        {5, {{1, -5, 5}, {1, -3, 1}}},
        {5, {{1, -9, 28, -35, 15, -1}}},
        {6, {{1, -1}, {1, -2}, {1, -3}, {1, -4, 1}}},
        {6, {{1, -11, 45, -84, 70, -21, 1}}},
    };
    const Algebra dual = dual_numbers(1);
    for (int n = 0; n <= 11; ++n) {
        LaurentPolynomial want = a.pow(table[static_cast<std::size_t>(n)].first);
        for (const auto& f : table[static_cast<std::size_t>(n)].second)
            want = want * from_descending(f);
        const GradedEuler got = graded_euler(fam(FamilyKind::Alternating, {n}), dual);
        t.expect(got.in_alpha == want, "A_" + std::to_string(n) + " gave " + got.in_alpha.factored("a"));
        const LaurentPolynomial qdim = LaurentPolynomial::constant(1) + LaurentPolynomial::monomial(1, 1);
        t.expect(got.in_q == want.compose(qdim), "A_" + std::to_string(n) + " q-form");
    }
    for (int n = 0; n <= 8; ++n) {
        const LaurentPolynomial want =
            n == 0 ? a : a * (a - LaurentPolynomial::constant(1)).pow(static_cast<unsigned>(n));
        const LaurentPolynomial got = graded_euler(fam(FamilyKind::Linear, {n}), dual).in_alpha;
        t.expect(got == want, "I_" + std::to_string(n) + " gave " + got.factored("a"));
    }
    // Series of a(1-t)/(1 - a t (1-t)) via c_n = a(c_{n-1} - c_{n-2}) + a[n=0] - a[n=1].
    const auto series = alternating_generating_series(11);
    std::vector<LaurentPolynomial> c(12);
    for (std::size_t n = 0; n < 12; ++n) {
        LaurentPolynomial v;
        if (n >= 1)
            v += a * c[n - 1];
        if (n >= 2)
            v -= a * c[n - 2];
        if (n == 0)
            v += a;
        if (n == 1)
            v -= a;
        c[n] = v;
        t.expect(series.size() > n && series[n] == v, "series coefficient t^" + std::to_string(n));
        t.expect(euler_in_alpha(fam(FamilyKind::Alternating, {static_cast<int>(n)})) == v,
                 "direct chi(A_" + std::to_string(n) + ") against the series");
    }
}

// Criterion 6: algebra coefficients on linear graphs.
void algebra_coefficients(Tally& t)
{
    for (int n = 0; n <= 5; ++n) {
        const BettiTable got = algebra_betti(fam(FamilyKind::Linear, {n}), dual_numbers(1));
        t.expect(got == make_table({2}), "I_" + std::to_string(n) + " gave " + str(got));
    }
}

// Every digraph with at most five edges and no isolated vertex, up to relabelling:
// edges are added one at a time and fresh vertices take the next free labels.
std::vector<Digraph> small_digraphs(int max_edges)
{
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<Digraph> out;
    std::function<void(std::vector<std::pair<int, int>>, int)> grow = [&](std::vector<std::pair<int, int>> edges,
                                                                          int used) {
        auto key = edges;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            return;
        out.push_back(build_digraph(used, key));
        if (static_cast<int>(edges.size()) == max_edges)
            return;
        for (int s = 0; s <= used + 1; ++s)
            for (int u = 0; u <= used + 1; ++u) {
                if (s == u)
                    continue;
                const int fresh_hi = std::max(s, u), fresh_lo = std::min(s, u);
                if (fresh_hi > used && !(fresh_hi == used || (fresh_hi == used + 1 && fresh_lo == used)))
                    continue;
                if (std::find(edges.begin(), edges.end(), std::pair{s, u}) != edges.end())
                    continue;
                auto next = edges;
                next.emplace_back(s, u);
                grow(std::move(next), std::max({used, s + 1, u + 1}));
            }
    };
    grow({}, 0);
    return out;
}

// Criterion 7: structural tools.
void structure(Tally& t)
{
    const std::vector<Digraph> corpus = small_digraphs(5);
    t.expect(corpus.size() == 35615, "corpus has " + std::to_string(corpus.size()) + " graphs");
    std::size_t decompositions = 0;
    for (const Digraph& g : corpus) {
        for (int v = 0; v < g.vertex_count(); ++v)
            for (BundleKind k : {BundleKind::TargetBundle, BundleKind::SourceBundle}) {
                if ((k == BundleKind::TargetBundle ? g.in_degree(v) : g.out_degree(v)) < 2)
                    continue;
                ++decompositions;
                const Decomposition d = decompose_at_vertex(g, v, k);
                t.expect(d.partition_ok, "partition at " + std::to_string(v));
            }
        if (const auto e = detect_cone_edge(g)) {
            t.expect(verify_cone(g, *e), "cone bijection");
            t.expect(cohomology(g).is_zero(), "cone edge on a graph with cohomology");
        }
    }
    t.expect(decompositions > 10000, "only " + std::to_string(decompositions) + " decompositions checked");

    for (const char* suite : {"mv", "wedges"}) {
        const SuiteResult r = run_suite(suite, {});
        t.expect(r.passed, std::string("suite ") + suite);
    }
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 3; ++n)
            t.expect(cohomology(wedge_family(k, n)) == single(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(k)),
                     "G_" + std::to_string(k) + "," + std::to_string(n));

    std::mt19937_64 rng(97);
    int suspended = 0;
    while (suspended < 50) {
        const Digraph g = random_digraph(rng, 6, 6);
        std::vector<int> univalent;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.valence(v) == 1)
                univalent.push_back(v);
        if (univalent.empty())
            continue;
        const int w = univalent[std::uniform_int_distribution<std::size_t>(0, univalent.size() - 1)(rng)];
        const BettiTable before = cohomology(g), after = cohomology(suspend(g, w));
        t.expect(after == shift(before, 1), "suspension of instance " + std::to_string(suspended));
        ++suspended;
    }
}

// Criterion 8: generic properties of the construction.
void properties(Tally& t)
{
    std::vector<Digraph> corpus;
    for (const auto& [name, g] : named_instances())
        corpus.push_back(g);
    std::mt19937_64 rng(101);
    for (int i = 0; i < 100; ++i)
        corpus.push_back(random_digraph(rng, 7, 7));

    for (const Digraph& g : corpus) {
        t.expect(verify_d_squared(build_field_complex(g, FieldSpec::rationals())), "d^2 over Q");
        t.expect(verify_d_squared(build_field_complex(g, FieldSpec::prime(2))), "d^2 over F_2");
        if (g.edge_count() <= 6) {
            t.expect(verify_d_squared(build_algebra_complex(g, dual_numbers(1))), "d^2 with dual numbers");
            t.expect(verify_d_squared(build_algebra_complex(g, diagonal_algebra(2))), "d^2 with Q^2");
        }
        const BettiTable base = cohomology(g);
        std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
        std::iota(order.begin(), order.end(), 0);
        for (int k = 0; k < 5; ++k) {
            std::shuffle(order.begin(), order.end(), rng);
            t.expect(cohomology(reorder_edges(g, order)) == base, "edge order permutation");
        }
        t.expect(cohomology(reverse_orientation(g)) == base, "orientation reversal");
    }
    for (int i = 0; i < 50; ++i) {
        const Digraph g1 = random_digraph(rng, 5, 5), g2 = random_digraph(rng, 5, 5);
        t.expect(cohomology(disjoint_union(g1, g2)) == convolve(cohomology(g1), cohomology(g2)),
                 "disjoint union pair " + std::to_string(i));
    }
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
        {"1 table of small digraphs", table_examples},
        {"2 alternating graphs up to n = 12", alternating},
        {"3 linear closed form on all words up to length 10", linear_words},
        {"4 shift isomorphism with the multipath complex", simplicial},
        {"5 graded Euler characteristics", euler},
        {"6 dual-number coefficients on linear graphs", algebra_coefficients},
        {"7 structure suite", structure},
        {"8 property suite", properties},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(t);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %s (%.1fs", t.failures.empty() ? "PASS" : "FAIL", name.c_str(), secs);
        if (!t.failures.empty())
            std::printf(", %zu failure(s), first: %s", t.failures.size(), t.failures.front().c_str());
        std::printf(")\n");
        std::fflush(stdout);
        failed += !t.failures.empty();
    }
    return failed;
}
