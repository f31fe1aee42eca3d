#include <random>

#include "doctest.h"
#include "mpath/cohomology.hpp"
#include "mpath/error.hpp"
#include "mpath/linear.hpp"
#include "mpath/structure.hpp"
#include "mpath/suites.hpp"

using namespace mpath;

namespace {

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

GluingMap identity_map(const Digraph& common)
{
    GluingMap map{common, {}, {}};
    for (int v = 0; v < common.vertex_count(); ++v) {
        map.left.push_back(v);
        map.right.push_back(v);
    }
    return map;
}

}  // namespace

TEST_CASE("decomposition at a vertex")
{
    const Digraph d32 = fam(FamilyKind::Dandelion, {3, 2});
    const Decomposition d = decompose_at_vertex(d32, 3);
    CHECK(d.kind == BundleKind::TargetBundle);
    CHECK(d.partition_ok);
    CHECK(d.bundle_edges == std::vector<int>{0, 1, 2});
    CHECK(d.base.edge_count() == 2);
    CHECK(d.base.vertex_count() == 6);
    REQUIRE(d.pieces.size() == 3);
    for (const Digraph& p : d.pieces) {
        CHECK(p.edge_count() == 3);
        CHECK(cohomology(p).is_zero());  // each piece is D_{1,2} plus isolated vertices
    }

    const Decomposition a3 = decompose_at_vertex(linear_from_word("RLR"), 1);
    CHECK(a3.partition_ok);
    CHECK(a3.pieces.size() == 2);

    try {
        decompose_at_vertex(fam(FamilyKind::Linear, {2}), 1);
        FAIL("expected NotDecomposable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDecomposable);
    }

    const Decomposition src = decompose_at_vertex(d32, 3, BundleKind::SourceBundle);
    CHECK(src.bundle_edges == std::vector<int>{3, 4});
    CHECK(src.partition_ok);
}

TEST_CASE("partition holds at every decomposable vertex")
{
    std::mt19937_64 rng(73);
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        const Digraph g = random_digraph(rng, 6, 6);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (BundleKind k : {BundleKind::TargetBundle, BundleKind::SourceBundle}) {
                const int deg = k == BundleKind::TargetBundle ? g.in_degree(v) : g.out_degree(v);
                if (deg < 2)
                    continue;
                CHECK(decompose_at_vertex(g, v, k).partition_ok);
                ++checked;
            }
    }
    CHECK(checked > 50);
}

TEST_CASE("cone edges")
{
    CHECK(detect_cone_edge(fam(FamilyKind::Linear, {3})).has_value());
    CHECK(detect_cone_edge(fam(FamilyKind::Dandelion, {1, 4})).has_value());
    CHECK_FALSE(detect_cone_edge(fam(FamilyKind::Polygon, {3})).has_value());
    CHECK_FALSE(detect_cone_edge(fam(FamilyKind::Dandelion, {2, 2})).has_value());

    std::mt19937_64 rng(79);
    for (int i = 0; i < 200; ++i) {
        const Digraph g = random_digraph(rng, 6, 7);
        if (const auto e = detect_cone_edge(g)) {
            CHECK(verify_cone(g, *e));
            CHECK(cohomology(g).is_zero());
        }
    }
}

TEST_CASE("acyclicity reports")
{
    const AcyclicityReport ladder = acyclicity_report(fam(FamilyKind::Ladder, {7}));
    CHECK(ladder.verdict == Verdict::ProvedAcyclic);
    CHECK_FALSE(ladder.trace.empty());
    CHECK(cohomology(fam(FamilyKind::Ladder, {7})).is_zero());

    CHECK(acyclicity_report(fam(FamilyKind::Polygon, {3})).verdict == Verdict::Inconclusive);
    CHECK(acyclicity_report(Digraph(3, {})).verdict == Verdict::Inconclusive);

    // Root with a coherent tail r -> a -> b next to a second branch.
    const Digraph tail = build_digraph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    CHECK(acyclicity_report(tail).verdict == Verdict::ProvedAcyclic);
    CHECK(report_json(acyclicity_report(tail)).find("ProvedAcyclic") != std::string::npos);

    // A branching at distance one leaves nontrivial cohomology, so no proof may be found.
    const Digraph fork = build_digraph(5, {{0, 1}, {1, 2}, {1, 3}, {0, 4}});
    CHECK(cohomology(fork) == single(2, 1));
    CHECK(acyclicity_report(fork).verdict == Verdict::Inconclusive);

    std::mt19937_64 rng(83);
    int proved = 0;
    for (int i = 0; i < 200; ++i) {
        const Digraph g = random_digraph(rng, 6, 7);
        if (acyclicity_report(g).verdict == Verdict::ProvedAcyclic) {
            ++proved;
            CHECK(cohomology(g).is_zero());
        }
    }
    CHECK(proved > 20);
}

TEST_CASE("mayer vietoris")
{
    // D_{2,2} as the gluing of its two pieces over the base.
    const Decomposition d = decompose_at_vertex(fam(FamilyKind::Dandelion, {2, 2}), 2);
    const MayerVietorisReport rep = mayer_vietoris_check(d.pieces[0], d.pieces[1], d.base, identity_map(d.base));
    CHECK(rep.status == MvStatus::Ok);
    CHECK(rep.glued_betti == single(2, 1));
    CHECK(rep.left_betti.is_zero());
    CHECK(rep.right_betti.is_zero());
    CHECK(rep.common_betti == single(1, 1));

    const Digraph i2 = fam(FamilyKind::Linear, {2});
    const GluingMap middle{fam(FamilyKind::Linear, {1}), {1, 2}, {0, 1}};
    CHECK(mayer_vietoris_check(i2, i2, middle.common, middle).status == MvStatus::PosetMismatch);

    try {
        mayer_vietoris_check(i2, i2, fam(FamilyKind::Linear, {2}), middle);
        FAIL("expected NotRegularMorphism");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotRegularMorphism);
    }
}

TEST_CASE("suspension")
{
    const Digraph d02 = fam(FamilyKind::SourceStar, {2});
    CHECK(cohomology(suspend(d02, 1)) == single(2, 1));

    const Digraph d03 = fam(FamilyKind::SourceStar, {3});
    const Digraph once = suspend(d03, 1);
    int w = -1;
    for (int v = 0; v < once.vertex_count() && w < 0; ++v)
        if (once.valence(v) == 1)
            w = v;
    REQUIRE(w >= 0);
    CHECK(cohomology(suspend(once, w)) == single(3, 2));

    CHECK(cohomology(suspend(fam(FamilyKind::Linear, {1}), 0)).is_zero());

    try {
        suspend(fam(FamilyKind::Linear, {2}), 1);
        FAIL("expected NotUnivalent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotUnivalent);
    }

    std::mt19937_64 rng(89);
    int done = 0;
    while (done < 30) {
        const Digraph g = random_digraph(rng, 5, 5);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.valence(v) != 1)
                continue;
            CHECK(cohomology(suspend(g, v)) == shift(cohomology(g), 1));
            ++done;
            break;
        }
    }
}

TEST_CASE("wedge family")
{
    CHECK(wedge_family(3, 1) == fam(FamilyKind::Dandelion, {4, 2}));
    CHECK(cohomology(wedge_family(3, 1)) == single(2, 3));
    CHECK(cohomology(wedge_family(2, 2)) == single(3, 2));
    CHECK(wedge_family(1, 0) == fam(FamilyKind::Dandelion, {2, 0}));
    CHECK(cohomology(wedge_family(1, 0)) == single(1, 1));
}
