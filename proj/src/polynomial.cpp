#include "mpath/polynomial.hpp"

#include <algorithm>
#include <vector>

#include "mpath/error.hpp"

namespace mpath {

LaurentPolynomial LaurentPolynomial::constant(long c)
{
    return monomial(c, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(long c, int exponent)
{
    LaurentPolynomial p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPolynomial::add_term(int e, const mpz_class& c)
{
    if (c == 0)
        return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0)
        terms_.erase(e);
}

mpz_class LaurentPolynomial::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPolynomial::min_exponent() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const
{
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const
{
    LaurentPolynomial out = constant(1);
    for (unsigned i = 0; i < n; ++i)
        out = out * *this;
    return out;
}

LaurentPolynomial LaurentPolynomial::compose(const LaurentPolynomial& s) const
{
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) {
        if (e < 0)
            throw Error(ErrorKind::BadParameters, "cannot substitute into a negative power");
        LaurentPolynomial term = s.pow(static_cast<unsigned>(e));
        for (auto& [e2, c2] : term.terms_)
            out.add_term(e2, c * c2);
    }
    return out;
}

mpz_class LaurentPolynomial::evaluate(const mpz_class& x) const
{
    mpz_class sum = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0)
            throw Error(ErrorKind::BadParameters, "cannot evaluate a negative power at an integer");
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
        sum += c * p;
    }
    return sum;
}

namespace {

std::string power(const std::string& var, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentPolynomial::to_string(const std::string& var) const
{
    return render(var, true);
}

std::string LaurentPolynomial::render(const std::string& var, bool ascending) const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<int, mpz_class>> ordered(terms_.begin(), terms_.end());
    if (!ascending)
        std::reverse(ordered.begin(), ordered.end());
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ordered) {
        mpz_class mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mag != 1 || e == 0)
            out += mag.get_str();
        out += power(var, e);
        first = false;
    }
    return out;
}

std::string LaurentPolynomial::factored(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    if (min_exponent() < 0)
        return to_string(var);
    // Dense ascending coefficients after removing the var^k factor.
    const int low = min_exponent();
    std::vector<mpz_class> c(static_cast<std::size_t>(max_exponent() - low + 1));
    for (const auto& [e, v] : terms_)
        c[static_cast<std::size_t>(e - low)] = v;

    std::string out;
    const mpz_class lead = c.back();
    const bool monic = lead == 1 || lead == -1;
    if (lead == -1)
        out += "-";
    out += power(var, low);

    std::vector<std::pair<mpz_class, int>> roots;
    while (monic && c.size() > 1) {
        // Monic (up to sign): integer roots divide the constant term.
        const mpz_class c0 = abs(c.front());
        bool found = false;
        for (mpz_class d = 1; d <= c0 && !found; ++d) {
            if (c0 % d != 0)
                continue;
            for (int sgn : {1, -1}) {
                const mpz_class r = d * sgn;
                // Synthetic division by (x - r), high to low.
                std::vector<mpz_class> q(c.size() - 1);
                mpz_class carry = 0;
                for (std::size_t i = c.size(); i-- > 1;) {
                    carry = carry * r + c[i];
                    q[i - 1] = carry;
                }
                if (carry * r + c[0] != 0)
                    continue;
                c = std::move(q);
                auto it = std::find_if(roots.begin(), roots.end(), [&r](const auto& x) { return x.first == r; });
                if (it != roots.end())
                    ++it->second;
                else
                    roots.emplace_back(r, 1);
                found = true;
                break;
            }
        }
        if (!found)
            break;
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [r, mult] : roots) {
        std::string f = "(" + var + (r > 0 ? "-" : "+") + mpz_class(abs(r)).get_str() + ")";
        out += f;
        if (mult > 1)
            out += "^" + std::to_string(mult);
    }
    if (c.size() > 1) {
        LaurentPolynomial rest;
        for (std::size_t i = 0; i < c.size(); ++i)
            rest.add_term(static_cast<int>(i), monic ? c[i] * lead : c[i]);
        out += "(" + rest.render(var, false) + ")";
    }
    if (out.empty() || out == "-")
        out += "1";
    return out;
}

}  // namespace mpath
