#include "mpath/cohomology.hpp"

#include <iomanip>
#include <sstream>

namespace mpath {

BettiTable make_table(std::vector<std::size_t> betti)
{
    while (!betti.empty() && betti.back() == 0)
        betti.pop_back();
    BettiTable t;
    long e = 0;
    for (std::size_t n = 0; n < betti.size(); ++n)
        e += (n % 2 == 0 ? 1 : -1) * static_cast<long>(betti[n]);
    t.betti = std::move(betti);
    t.euler = e;
    return t;
}

CochainComplex build_field_complex(const PathPoset& p, const SignAssignment& s, const FieldSpec& f)
{
    CochainComplex c;
    c.field = f;
    const int top = p.max_level();
    for (int k = 0; k <= top; ++k)
        c.dims.push_back(p.level_end(k) - p.level_begin(k));
    for (int k = 0; k < top; ++k)
        c.differentials.emplace_back(c.dims[static_cast<std::size_t>(k) + 1], c.dims[static_cast<std::size_t>(k)]);
    for (std::size_t i = 0; i < p.covers().size(); ++i) {
        const Cover& cv = p.covers()[i];
        const int k = p.level(cv.lower);
        const std::size_t row = cv.upper - p.level_begin(k + 1);
        const std::size_t col = cv.lower - p.level_begin(k);
        c.differentials[static_cast<std::size_t>(k)].add(row, col, s.signs[i] ? -1 : 1);
    }
    for (auto& d : c.differentials)
        d.compress();
    return c;
}

CochainComplex build_field_complex(const Digraph& g, const FieldSpec& f, std::size_t cap)
{
    const PathPoset p = enumerate_path_poset(g, cap);
    return build_field_complex(p, canonical_sign(p, g), f);
}

namespace {

bool zero_mod(const SparseMatrix& m, const FieldSpec& f)
{
    if (f.kind == FieldSpec::Kind::Rationals)
        return m.is_zero();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) {
            mpz_class num = v.get_num() % static_cast<unsigned long>(f.p);
            if (num != 0)
                return false;
        }
    }
    return true;
}

}  // namespace

bool verify_d_squared(const CochainComplex& c)
{
    for (std::size_t n = 0; n + 1 < c.differentials.size(); ++n) {
        SparseMatrix prod = multiply(c.differentials[n + 1], c.differentials[n]);
        prod.compress();
        if (!zero_mod(prod, c.field))
            return false;
    }
    return true;
}

BettiTable betti_numbers(const CochainComplex& c)
{
    if (!verify_d_squared(c))
        throw Error(ErrorKind::NotAComplex, "consecutive differentials do not compose to zero");
    std::vector<std::size_t> ranks;
    ranks.reserve(c.differentials.size());
    for (const auto& d : c.differentials)
        ranks.push_back(rank(d, c.field));
    std::vector<std::size_t> betti(c.dims.size(), 0);
    for (std::size_t n = 0; n < c.dims.size(); ++n) {
        const std::size_t out = n < ranks.size() ? ranks[n] : 0;
        const std::size_t in = n > 0 ? ranks[n - 1] : 0;
        betti[n] = c.dims[n] - out - in;
    }
    return make_table(std::move(betti));
}

long euler_characteristic(const CochainComplex& c)
{
    long e = 0;
    for (std::size_t n = 0; n < c.dims.size(); ++n)
        e += (n % 2 == 0 ? 1 : -1) * static_cast<long>(c.dims[n]);
    return e;
}

BettiTable cohomology(const Digraph& g, const FieldSpec& f, std::size_t cap)
{
    return betti_numbers(build_field_complex(g, f, cap));
}

CrossCheck cross_checked_cohomology(const Digraph& g, const std::vector<std::uint64_t>& primes, std::size_t cap)
{
    const PathPoset p = enumerate_path_poset(g, cap);
    const SignAssignment s = canonical_sign(p, g);
    CrossCheck out;
    out.rational = betti_numbers(build_field_complex(p, s, FieldSpec::rationals()));
    for (std::uint64_t q : primes) {
        BettiTable t = betti_numbers(build_field_complex(p, s, FieldSpec::prime(q)));
        if (!(t == out.rational))
            out.torsion_warning = true;
        out.modular.emplace_back(q, std::move(t));
    }
    return out;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b)
{
    if (a.betti.empty() || b.betti.empty())
        return make_table({});
    std::vector<std::size_t> out(a.betti.size() + b.betti.size() - 1, 0);
    for (std::size_t i = 0; i < a.betti.size(); ++i)
        for (std::size_t j = 0; j < b.betti.size(); ++j)
            out[i + j] += a.betti[i] * b.betti[j];
    return make_table(std::move(out));
}

BettiTable shift(const BettiTable& t, int degrees)
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < t.betti.size(); ++n) {
        const long target = static_cast<long>(n) + degrees;
        if (t.betti[n] == 0)
            continue;
        if (target < 0)
            throw Error(ErrorKind::BadParameters, "shift moves a nonzero entry below degree 0");
        if (out.size() <= static_cast<std::size_t>(target))
            out.resize(static_cast<std::size_t>(target) + 1, 0);
        out[static_cast<std::size_t>(target)] = t.betti[n];
    }
    return make_table(std::move(out));
}

std::string betti_csv(const BettiTable& t)
{
    std::ostringstream os;
    os << "degree,dimension\n";
    for (std::size_t n = 0; n < t.betti.size(); ++n)
        os << n << "," << t.betti[n] << "\n";
    return os.str();
}

std::string betti_text(const BettiTable& t)
{
    std::ostringstream os;
    os << std::left << std::setw(8) << "degree" << "dimension\n";
    if (t.betti.empty())
        os << "(all zero)\n";
    for (std::size_t n = 0; n < t.betti.size(); ++n)
        os << std::left << std::setw(8) << n << t.betti[n] << "\n";
    os << "euler " << t.euler << "\n";
    return os.str();
}

}  // namespace mpath
