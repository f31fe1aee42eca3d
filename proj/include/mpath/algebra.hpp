/**
 * Multipath cochains with coefficients in a finite-rank unital algebra over Q.
 *
 * A multipath H with c(H) connected components carries A^{(x) c(H)}, the
 * tensor factors ordered by minimal vertex. Adding an edge merges the
 * components of its endpoints: the product a_source * a_target lands in the
 * lower of the two slots and the higher slot disappears.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mpath/cohomology.hpp"
#include "mpath/polynomial.hpp"

namespace mpath {

struct Algebra {
    int rank = 1;
    // table[(i * rank + j) * rank + k] = coefficient of e_k in e_i * e_j.
    std::vector<mpq_class> table;
    std::vector<mpq_class> unit;
    std::optional<std::vector<int>> degrees;

    const mpq_class& product(int i, int j, int k) const
    {
        return table[static_cast<std::size_t>((i * rank + j) * rank + k)];
    }
};

// Throws InvalidAlgebra on a shape error, a non-identity unit, non-associativity
// or a product that breaks the grading.
void validate_algebra(const Algebra& a);

Algebra field_algebra();
// Q[x]/(x^2) on the basis {1, x} with deg x = degree.
Algebra dual_numbers(int degree = 1);
// Q^r with orthogonal idempotents, all in degree 0.
Algebra diagonal_algebra(int r);

// Sum of q^deg over the basis. Throws UngradedAlgebra without degrees.
LaurentPolynomial graded_dimension(const Algebra& a);

CochainComplex build_algebra_complex(const Digraph& g, const Algebra& a, std::size_t cap = kDefaultSizeCap);
BettiTable algebra_betti(const Digraph& g, const Algebra& a, std::size_t cap = kDefaultSizeCap);

// dim C^n for a rank-r algebra, from the poset alone.
std::vector<mpz_class> algebra_dimensions(const Digraph& g, int rank, std::size_t cap = kDefaultSizeCap);

struct GradedEuler {
    LaurentPolynomial in_q;
    LaurentPolynomial in_alpha;  // alpha stands for the graded dimension of A
};

GradedEuler graded_euler(const Digraph& g, const Algebra& a, std::size_t cap = kDefaultSizeCap);

// Sum over multipaths of (-1)^level alpha^{components}.
LaurentPolynomial euler_in_alpha(const Digraph& g, std::size_t cap = kDefaultSizeCap);

// chi(A_0) = a, chi(A_1) = a(a-1), chi(A_n) = a(chi(A_{n-1}) - chi(A_{n-2})).
std::vector<LaurentPolynomial> alternating_chi_sequence(int max_n);

// Coefficients of t^0..t^max_n in a(1-t) / (1 - a t (1-t)), by series arithmetic.
std::vector<LaurentPolynomial> alternating_generating_series(int max_n);

enum class LeafCase { Coherent, NonCoherent };

struct LeafConfiguration {
    Digraph whole;           // G
    Digraph without_leaf;    // G' = G minus the leaf
    Digraph without_pair;    // G'' = G minus the leaf and its neighbour
    LeafCase orientation = LeafCase::Coherent;
};

// `leaf` must be univalent and its neighbour must have valence two.
LeafConfiguration leaf_configuration(const Digraph& g, int leaf);

struct LeafReport {
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

LeafReport leaf_sequence_dimension_check(const Digraph& g, const Digraph& g_prime, const Digraph& g_double_prime,
                                         const Algebra& a, LeafCase orientation);

}  // namespace mpath
