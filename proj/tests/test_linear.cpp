#include "doctest.h"
#include "mpath/cohomology.hpp"
#include "mpath/error.hpp"
#include "mpath/linear.hpp"

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

// Runs of equal letters, read directly off the word.
std::vector<int> run_lengths(const std::string& w)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i])
            ++j;
        out.push_back(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

TEST_CASE("words and graphs")
{
    CHECK(linear_from_word("RRR") == fam(FamilyKind::Linear, {3}));
    CHECK(linear_from_word("RL") == fam(FamilyKind::Alternating, {2}));
    CHECK(linear_from_word("RLRLR") == fam(FamilyKind::Alternating, {5}));
    CHECK(linear_from_word("").vertex_count() == 1);
    for (const std::string& w : all_words(6))
        CHECK(word_of(linear_from_word(w)) == w);
    CHECK(all_words(3).size() == 8);
    CHECK_THROWS_AS(linear_from_word("RXL"), Error);
    try {
        word_of(fam(FamilyKind::Dandelion, {2, 1}));
        FAIL("expected NotLinear");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotLinear);
    }
}

TEST_CASE("reduction data")
{
    const ReductionData r = analyze_word("RLRRL");
    CHECK(r.components == std::vector<int>{2, 2});
    CHECK(r.minimal_d == 2);
    CHECK(analyze_word("RRL").components == std::vector<int>{0, 2});
    for (int n = 1; n <= 8; ++n) {
        const ReductionData a = analyze(fam(FamilyKind::Alternating, {n}));
        CHECK(a.components == std::vector<int>{n});
        CHECK(a.minimal_d == 1);
    }
    // The largest gap between stable positions is the longest coherent run.
    for (const std::string& w : all_words(8)) {
        const auto runs = run_lengths(w);
        CHECK(analyze_word(w).minimal_d == *std::max_element(runs.begin(), runs.end()));
    }
}

TEST_CASE("closed form tables")
{
    CHECK(closed_form_betti(fam(FamilyKind::Alternating, {5})) == single(2, 1));
    CHECK(closed_form_betti(fam(FamilyKind::Alternating, {4})).is_zero());
    CHECK(closed_form_word("RLRRL") == single(2, 1));
    CHECK(cohomology(linear_from_word("RLRRL")) == single(2, 1));
    CHECK(closed_form_word("RRR").is_zero());

    CHECK(alternating_table(6) == alternating_table(5));
    CHECK(alternating_table(7).is_zero());
    CHECK(alternating_table(8) == shift(alternating_table(6), 1));
    for (int n = 0; n <= 12; ++n) {
        const BettiTable t = alternating_table(n);
        for (std::size_t k = 0; k < 6; ++k) {
            const bool hit = static_cast<int>(k) * 3 - 1 == n || static_cast<int>(k) * 3 == n;
            CHECK(t.at(k) == (hit ? 1u : 0u));
        }
    }
}

TEST_CASE("closed form matches direct computation on short words")
{
    for (int n = 0; n <= 7; ++n)
        for (const std::string& w : all_words(n))
            REQUIRE(closed_form_word(w) == cohomology(linear_from_word(w)));
}

TEST_CASE("alternating recursion")
{
    CHECK(recursion_check_alternating(9).ok());
    CHECK(recursion_check_alternating(6, FieldSpec::prime(3)).ok());
    CHECK_THROWS_AS(recursion_check_alternating(1), Error);
}
