#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

namespace mpath {

// Finitely supported integer Laurent polynomial in one variable.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial constant(long c);
    static LaurentPolynomial monomial(long c, int exponent);

    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coefficient(int exponent) const;
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;
    int max_exponent() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const { return LaurentPolynomial(*this) += o; }
    LaurentPolynomial operator-(const LaurentPolynomial& o) const { return LaurentPolynomial(*this) -= o; }
    LaurentPolynomial pow(unsigned n) const;
    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    // p(x) -> p(s(x)); negative exponents need an invertible substitute, so they are rejected.
    LaurentPolynomial compose(const LaurentPolynomial& s) const;
    mpz_class evaluate(const mpz_class& x) const;

    // Ascending exponents, e.g. "1 + 2q + q^2".
    std::string to_string(const std::string& var) const;
    // Pulls out var^k and integer roots, e.g. "a^3(a-1)(a-3)".
    std::string factored(const std::string& var) const;

    std::string render(const std::string& var, bool ascending) const;

private:
    void add_term(int e, const mpz_class& c);
    std::map<int, mpz_class> terms_;
};

}  // namespace mpath
