#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mpath/linalg.hpp"
#include "mpath/path_poset.hpp"
#include "mpath/sign.hpp"

namespace mpath {

// dims[n] = dim C^n; differentials[n] : C^n -> C^{n+1} has shape dims[n+1] x dims[n].
struct CochainComplex {
    FieldSpec field;
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> differentials;
};

struct BettiTable {
    std::vector<std::size_t> betti;  // betti[n] for n = 0..size-1, trailing zeros trimmed
    long euler = 0;

    std::size_t at(std::size_t n) const { return n < betti.size() ? betti[n] : 0; }
    bool is_zero() const { return betti.empty(); }
    bool operator==(const BettiTable&) const = default;
};

BettiTable make_table(std::vector<std::size_t> betti);

// Generators ordered as in the path poset; signs from the given assignment.
CochainComplex build_field_complex(const PathPoset& p, const SignAssignment& s, const FieldSpec& f);
CochainComplex build_field_complex(const Digraph& g, const FieldSpec& f, std::size_t cap = kDefaultSizeCap);

bool verify_d_squared(const CochainComplex& c);

// Throws NotAComplex if some d^{n+1} d^n is nonzero.
BettiTable betti_numbers(const CochainComplex& c);

long euler_characteristic(const CochainComplex& c);

BettiTable cohomology(const Digraph& g, const FieldSpec& f = FieldSpec::rationals(),
                      std::size_t cap = kDefaultSizeCap);

struct CrossCheck {
    BettiTable rational;
    std::vector<std::pair<std::uint64_t, BettiTable>> modular;
    bool torsion_warning = false;
};

CrossCheck cross_checked_cohomology(const Digraph& g, const std::vector<std::uint64_t>& primes = {2, 3, 101},
                                    std::size_t cap = kDefaultSizeCap);

// Graded convolution: the table of a tensor product of complexes.
BettiTable convolve(const BettiTable& a, const BettiTable& b);
BettiTable shift(const BettiTable& t, int degrees);

std::string betti_csv(const BettiTable& t);
std::string betti_text(const BettiTable& t);

}  // namespace mpath
