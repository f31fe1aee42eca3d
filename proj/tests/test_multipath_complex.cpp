#include <random>

#include "doctest.h"
#include "mpath/multipath_complex.hpp"
#include "mpath/suites.hpp"

using namespace mpath;

namespace {

Digraph fam(FamilyKind k, std::vector<int> p = {})
{
    return family({k, std::move(p)});
}

}  // namespace

TEST_CASE("facets")
{
    const SimplicialComplex i2 = build_multipath_complex(fam(FamilyKind::Linear, {2}));
    CHECK(i2.facets == std::vector<std::vector<int>>{{0, 1}});
    CHECK(export_complex(i2).find("e0 e1") != std::string::npos);

    const SimplicialComplex p2 = build_multipath_complex(fam(FamilyKind::Polygon, {2}));
    CHECK(p2.facets == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    const SimplicialComplex d22 = build_multipath_complex(fam(FamilyKind::Dandelion, {2, 2}));
    CHECK(d22.facets.size() == 4);
    for (const auto& f : d22.facets)
        CHECK(f.size() == 2);

    const SimplicialComplex point = build_multipath_complex(Digraph(1, {}));
    CHECK(point.vertex_count() == 0);
    CHECK(point.simplex_count() == 1);
}

TEST_CASE("boundary of a simplex")
{
    for (int n = 2; n <= 5; ++n) {
        const SimplicialComplex x = build_multipath_complex(fam(FamilyKind::Polygon, {n}));
        CHECK(x.facets.size() == static_cast<std::size_t>(n + 1));
        CHECK(x.simplex_count() == (std::size_t{1} << (n + 1)) - 1);
        const ReducedBetti b = reduced_simplicial_betti(x);
        for (int d = -1; d <= n; ++d)
            CHECK(b.in_dimension(d) == (d == n - 1 ? 1u : 0u));
    }
}

TEST_CASE("complete bipartite graphs")
{
    const SimplicialComplex x = build_multipath_complex(fam(FamilyKind::Dandelion, {3, 2}));
    CHECK(x.facets.size() == 6);
    CHECK(reduced_simplicial_betti(x).in_dimension(1) == 2);
    CHECK(reduced_simplicial_betti(x).in_dimension(0) == 0);

    const ReducedBetti q = reduced_simplicial_betti(build_multipath_complex(fam(FamilyKind::DiagonalSquare)));
    CHECK(q.in_dimension(1) == 1);
    CHECK(q.in_dimension(2) == 1);
    CHECK(q.in_dimension(0) == 0);

    // Only the empty simplex: reduced cohomology sits in dimension -1.
    CHECK(reduced_simplicial_betti(build_multipath_complex(Digraph(1, {}))).in_dimension(-1) == 1);
}

TEST_CASE("shift isomorphism")
{
    const ShiftReport p4 = verify_shift_isomorphism(fam(FamilyKind::Polygon, {4}));
    CHECK(p4.ok());
    CHECK(p4.multipath.at(4) == 1);
    CHECK(p4.simplicial.in_dimension(3) == 1);

    const ShiftReport d31 = verify_shift_isomorphism(fam(FamilyKind::Dandelion, {3, 1}));
    CHECK(d31.ok());
    CHECK(d31.multipath.is_zero());

    std::mt19937_64 rng(71);
    for (int i = 0; i < 50; ++i) {
        const Digraph g = random_digraph(rng, 6, 6);
        CHECK(verify_shift_isomorphism(g).ok());
        CHECK(verify_shift_isomorphism(g, FieldSpec::prime(2)).ok());
    }
}
