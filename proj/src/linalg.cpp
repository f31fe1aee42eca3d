#include "mpath/linalg.hpp"

#include <algorithm>
#include <map>

#include "mpath/error.hpp"

namespace mpath {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (!is_prime(p) || p >= (std::uint64_t{1} << 31))
        throw Error(ErrorKind::BadParameters, "field characteristic must be a prime below 2^31");
    return {Kind::Prime, p};
}

void SparseMatrix::compress()
{
    for (auto& r : data_) {
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<std::size_t, mpq_class>> merged;
        for (auto& [c, v] : r) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
                     merged.end());
        r = std::move(merged);
    }
}

mpq_class SparseMatrix::at(std::size_t r, std::size_t c) const
{
    for (const auto& [col, v] : data_[r])
        if (col == c)
            return v;
    return 0;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::BadParameters, "matrix shapes do not chain");
    SparseMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::map<std::size_t, mpq_class> acc;
        for (const auto& [k, v] : a.row(r))
            for (const auto& [c, w] : b.row(k))
                acc[c] += v * w;
        for (auto& [c, v] : acc)
            if (v != 0)
                out.add(r, c, v);
    }
    return out;
}

std::size_t rank_bareiss(const SparseMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;
    // Clear denominators row by row; rank is unchanged.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (const auto& [c, v] : m.row(r))
            l = lcm(l, v.get_den());
        for (const auto& [c, v] : m.row(r))
            a[r][c] = v.get_num() * (l / v.get_den());
    }

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            if (pivot == rows || abs(a[r][col]) < abs(a[pivot][col]))
                pivot = r;
        }
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        const mpz_class& p = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const mpz_class f = a[r][col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class t = p * a[r][c];
                if (f != 0)
                    t -= f * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p)
{
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0)
        r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0)
        return 0;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (const auto& [c, v] : m.row(r)) {
            const std::uint64_t den = reduce(v.get_den(), p);
            if (den == 0)
                throw Error(ErrorKind::BadParameters, "denominator vanishes modulo " + std::to_string(p));
            a[r][c] = reduce(v.get_num(), p) * pow_mod(den, p - 2, p) % p;
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = pow_mod(a[rank][col], p - 2, p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            const std::uint64_t f = a[r][col] * inv % p;
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = (a[r][c] + (p - f) * a[rank][c]) % p;
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(const SparseMatrix& m, const FieldSpec& f)
{
    return f.kind == FieldSpec::Kind::Rationals ? rank_bareiss(m) : rank_mod_p(m, f.p);
}

}  // namespace mpath
