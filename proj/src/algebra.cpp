#include "mpath/algebra.hpp"

#include <bit>

namespace mpath {

void validate_algebra(const Algebra& a)
{
    const int r = a.rank;
    if (r < 1)
        throw Error(ErrorKind::InvalidAlgebra, "rank must be positive");
    if (a.table.size() != static_cast<std::size_t>(r * r * r))
        throw Error(ErrorKind::InvalidAlgebra, "structure table needs rank^3 entries");
    if (a.unit.size() != static_cast<std::size_t>(r))
        throw Error(ErrorKind::InvalidAlgebra, "unit needs rank entries");
    if (a.degrees && a.degrees->size() != static_cast<std::size_t>(r))
        throw Error(ErrorKind::InvalidAlgebra, "degrees need rank entries");

    auto idx = [r](int i) { return static_cast<std::size_t>(i); };
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k) {
            mpq_class left = 0, right = 0;
            for (int u = 0; u < r; ++u) {
                left += a.unit[idx(u)] * a.product(u, i, k);
                right += a.unit[idx(u)] * a.product(i, u, k);
            }
            const mpq_class expected = (i == k) ? 1 : 0;
            if (left != expected || right != expected)
                throw Error(ErrorKind::InvalidAlgebra, "unit is not a two-sided identity on e" + std::to_string(i));
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int out = 0; out < r; ++out) {
                    mpq_class lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += a.product(i, j, m) * a.product(m, k, out);
                        rhs += a.product(j, k, m) * a.product(i, m, out);
                    }
                    if (lhs != rhs)
                        throw Error(ErrorKind::InvalidAlgebra, "product is not associative on (e" + std::to_string(i) +
                                                                   ", e" + std::to_string(j) + ", e" +
                                                                   std::to_string(k) + ")");
                }
    if (a.degrees) {
        const auto& d = *a.degrees;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    if (a.product(i, j, k) != 0 && d[idx(i)] + d[idx(j)] != d[idx(k)])
                        throw Error(ErrorKind::InvalidAlgebra, "product breaks the grading");
    }
}

Algebra field_algebra()
{
    Algebra a;
    a.rank = 1;
    a.table = {1};
    a.unit = {1};
    a.degrees = std::vector<int>{0};
    return a;
}

Algebra dual_numbers(int degree)
{
    Algebra a;
    a.rank = 2;
    a.table.assign(8, 0);
    // 1*1 = 1, 1*x = x*1 = x, x*x = 0.
    a.table[(0 * 2 + 0) * 2 + 0] = 1;
    a.table[(0 * 2 + 1) * 2 + 1] = 1;
    a.table[(1 * 2 + 0) * 2 + 1] = 1;
    a.unit = {1, 0};
    a.degrees = std::vector<int>{0, degree};
    return a;
}

Algebra diagonal_algebra(int r)
{
    if (r < 1)
        throw Error(ErrorKind::InvalidAlgebra, "rank must be positive");
    Algebra a;
    a.rank = r;
    a.table.assign(static_cast<std::size_t>(r * r * r), 0);
    for (int i = 0; i < r; ++i)
        a.table[static_cast<std::size_t>((i * r + i) * r + i)] = 1;
    a.unit.assign(static_cast<std::size_t>(r), 1);
    a.degrees = std::vector<int>(static_cast<std::size_t>(r), 0);
    return a;
}

LaurentPolynomial graded_dimension(const Algebra& a)
{
    if (!a.degrees)
        throw Error(ErrorKind::UngradedAlgebra, "algebra carries no grading");
    LaurentPolynomial q;
    for (int d : *a.degrees)
        q += LaurentPolynomial::monomial(1, d);
    return q;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Slot of each vertex in the ordered component list.
std::vector<int> slot_of(const std::vector<std::vector<int>>& comps, int vertex_count)
{
    std::vector<int> slot(static_cast<std::size_t>(vertex_count), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c])
            slot[static_cast<std::size_t>(v)] = static_cast<int>(c);
    return slot;
}

}  // namespace

CochainComplex build_algebra_complex(const Digraph& g, const Algebra& a, std::size_t cap)
{
    validate_algebra(a);
    const PathPoset p = enumerate_path_poset(g, cap);
    const SignAssignment s = canonical_sign(p, g);
    const auto r = static_cast<std::size_t>(a.rank);

    std::vector<std::vector<std::vector<int>>> comps(p.size());
    std::vector<std::size_t> offset(p.size(), 0);
    CochainComplex c;
    c.field = FieldSpec::rationals();
    for (int k = 0; k <= p.max_level(); ++k) {
        std::size_t dim = 0;
        for (std::size_t id = p.level_begin(k); id < p.level_end(k); ++id) {
            comps[id] = components(g, p.mask(id));
            offset[id] = dim;
            dim += ipow(r, comps[id].size());
        }
        c.dims.push_back(dim);
    }
    for (int k = 0; k < p.max_level(); ++k)
        c.differentials.emplace_back(c.dims[static_cast<std::size_t>(k) + 1], c.dims[static_cast<std::size_t>(k)]);

    for (std::size_t ci = 0; ci < p.covers().size(); ++ci) {
        const Cover& cv = p.covers()[ci];
        const auto& lower = comps[cv.lower];
        const auto slot = slot_of(lower, g.vertex_count());
        const int src = slot[static_cast<std::size_t>(g.edge(cv.edge).source)];
        const int tgt = slot[static_cast<std::size_t>(g.edge(cv.edge).target)];
        const auto lo = static_cast<std::size_t>(std::min(src, tgt));
        const auto hi = static_cast<std::size_t>(std::max(src, tgt));

        // The merged list must again be ordered by minimal vertex.
        std::vector<std::vector<int>> merged = lower;
        merged[lo].insert(merged[lo].end(), merged[hi].begin(), merged[hi].end());
        std::sort(merged[lo].begin(), merged[lo].end());
        merged.erase(merged.begin() + static_cast<long>(hi));
        if (merged != comps[cv.upper])
            throw Error(ErrorKind::ConfigurationMismatch, "component order changed after a merge");

        const std::size_t factors = lower.size();
        const int level = p.level(cv.lower);
        SparseMatrix& d = c.differentials[static_cast<std::size_t>(level)];
        const std::size_t col0 = offset[cv.lower];
        const std::size_t row0 = offset[cv.upper];
        const mpq_class sign = s.signs[ci] ? -1 : 1;
        std::vector<std::size_t> digits(factors);
        for (std::size_t t = 0; t < ipow(r, factors); ++t) {
            std::size_t rest = t;
            for (std::size_t f = factors; f-- > 0;) {
                digits[f] = rest % r;
                rest /= r;
            }
            const int x = static_cast<int>(digits[static_cast<std::size_t>(src)]);
            const int y = static_cast<int>(digits[static_cast<std::size_t>(tgt)]);
            for (int k = 0; k < a.rank; ++k) {
                const mpq_class& coeff = a.product(x, y, k);
                if (coeff == 0)
                    continue;
                std::size_t row = 0;
                for (std::size_t f = 0; f < factors; ++f) {
                    if (f == hi)
                        continue;
                    row = row * r + (f == lo ? static_cast<std::size_t>(k) : digits[f]);
                }
                d.add(row0 + row, col0 + t, sign * coeff);
            }
        }
    }
    for (auto& d : c.differentials)
        d.compress();
    return c;
}

BettiTable algebra_betti(const Digraph& g, const Algebra& a, std::size_t cap)
{
    return betti_numbers(build_algebra_complex(g, a, cap));
}

std::vector<mpz_class> algebra_dimensions(const Digraph& g, int rank, std::size_t cap)
{
    const PathPoset p = enumerate_path_poset(g, cap);
    std::vector<mpz_class> dims;
    for (int k = 0; k <= p.max_level(); ++k) {
        mpz_class dim = 0;
        for (std::size_t id = p.level_begin(k); id < p.level_end(k); ++id) {
            mpz_class term;
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(rank),
                          static_cast<unsigned long>(g.vertex_count() - k));
            dim += term;
        }
        dims.push_back(dim);
    }
    return dims;
}

LaurentPolynomial euler_in_alpha(const Digraph& g, std::size_t cap)
{
    const PathPoset p = enumerate_path_poset(g, cap);
    LaurentPolynomial chi;
    for (std::size_t id = 0; id < p.size(); ++id) {
        const int level = p.level(id);
        chi += LaurentPolynomial::monomial(level % 2 == 0 ? 1 : -1, g.vertex_count() - level);
    }
    return chi;
}

GradedEuler graded_euler(const Digraph& g, const Algebra& a, std::size_t cap)
{
    const LaurentPolynomial qdim = graded_dimension(a);
    GradedEuler out;
    out.in_alpha = euler_in_alpha(g, cap);
    out.in_q = out.in_alpha.compose(qdim);
    return out;
}

std::vector<LaurentPolynomial> alternating_chi_sequence(int max_n)
{
    if (max_n < 0)
        throw Error(ErrorKind::BadParameters, "max_n must be non-negative");
    const LaurentPolynomial alpha = LaurentPolynomial::monomial(1, 1);
    std::vector<LaurentPolynomial> seq{alpha};
    if (max_n >= 1)
        seq.push_back(alpha * (alpha - LaurentPolynomial::constant(1)));
    for (int n = 2; n <= max_n; ++n)
        seq.push_back(alpha * (seq[static_cast<std::size_t>(n) - 1] - seq[static_cast<std::size_t>(n) - 2]));
    return seq;
}

std::vector<LaurentPolynomial> alternating_generating_series(int max_n)
{
    using Series = std::vector<LaurentPolynomial>;  // index = power of t
    const auto len = static_cast<std::size_t>(max_n) + 1;
    auto mul = [len](const Series& x, const Series& y) {
        Series out(len);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j)
                out[i + j] += x[i] * y[j];
        return out;
    };
    const LaurentPolynomial alpha = LaurentPolynomial::monomial(1, 1);
    Series numerator(len), u(len);
    numerator[0] = alpha;
    if (len > 1) {
        numerator[1] = LaurentPolynomial() - alpha;
        u[1] = alpha;
    }
    if (len > 2)
        u[2] = LaurentPolynomial() - alpha;
    // 1 / (1 - u) = sum of u^k; u has no constant term, so k <= max_n suffices.
    Series geometric(len), power(len);
    power[0] = LaurentPolynomial::constant(1);
    for (std::size_t k = 0; k < len; ++k) {
        for (std::size_t i = 0; i < len; ++i)
            geometric[i] += power[i];
        power = mul(power, u);
    }
    return mul(numerator, geometric);
}

LeafConfiguration leaf_configuration(const Digraph& g, int leaf)
{
    if (leaf < 0 || leaf >= g.vertex_count() || g.valence(leaf) != 1)
        throw Error(ErrorKind::ConfigurationMismatch, "vertex " + std::to_string(leaf) + " is not a leaf");
    int e1 = -1;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edge(i).source == leaf || g.edge(i).target == leaf)
            e1 = i;
    const Edge& first = g.edge(e1);
    const int middle = first.source == leaf ? first.target : first.source;
    if (g.valence(middle) != 2)
        throw Error(ErrorKind::ConfigurationMismatch, "the leaf's neighbour must have valence two");
    int e2 = -1;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e1 && (g.edge(i).source == middle || g.edge(i).target == middle))
            e2 = i;
    const Edge& second = g.edge(e2);
    if (second.source == leaf || second.target == leaf)
        throw Error(ErrorKind::ConfigurationMismatch, "parallel edges at the leaf");
    // Coherent iff the middle vertex is the target of one edge and the source of the other.
    const bool coherent = (first.target == middle) == (second.source == middle);
    LeafConfiguration out;
    out.whole = g;
    out.without_leaf = remove_vertices(g, {leaf});
    out.without_pair = remove_vertices(g, {leaf, middle});
    out.orientation = coherent ? LeafCase::Coherent : LeafCase::NonCoherent;
    return out;
}

LeafReport leaf_sequence_dimension_check(const Digraph& g, const Digraph& g_prime, const Digraph& g_double_prime,
                                         const Algebra& a, LeafCase orientation)
{
    validate_algebra(a);
    if (g_prime.vertex_count() != g.vertex_count() - 1 || g_prime.edge_count() != g.edge_count() - 1 ||
        g_double_prime.vertex_count() != g.vertex_count() - 2 || g_double_prime.edge_count() != g.edge_count() - 2)
        throw Error(ErrorKind::ConfigurationMismatch, "graphs do not differ by a leaf and its neighbour");

    const int r = a.rank;
    const auto dg = algebra_dimensions(g, r);
    const auto d1 = algebra_dimensions(g_prime, r);
    const auto d2 = algebra_dimensions(g_double_prime, r);
    auto at = [](const std::vector<mpz_class>& v, long n) {
        return (n < 0 || n >= static_cast<long>(v.size())) ? mpz_class(0) : v[static_cast<std::size_t>(n)];
    };
    LeafReport report;
    const long top = static_cast<long>(std::max({dg.size(), d1.size() + 1, d2.size() + 1}));
    for (long n = 0; n < top; ++n) {
        const mpz_class expected = orientation == LeafCase::Coherent ? mpz_class(at(d1, n - 1) + r * at(d1, n))
                                                                     : mpz_class(r * at(d2, n - 1) + r * at(d1, n));
        if (at(dg, n) != expected)
            report.mismatches.push_back("degree " + std::to_string(n) + ": dim " + at(dg, n).get_str() +
                                        ", identity gives " + expected.get_str());
    }
    const LaurentPolynomial alpha = LaurentPolynomial::monomial(1, 1);
    const LaurentPolynomial chi = euler_in_alpha(g), chi1 = euler_in_alpha(g_prime);
    const LaurentPolynomial rhs = orientation == LeafCase::Coherent
                                      ? (alpha - LaurentPolynomial::constant(1)) * chi1
                                      : alpha * (chi1 - euler_in_alpha(g_double_prime));
    if (!(chi == rhs))
        report.mismatches.push_back("graded euler: " + chi.to_string("a") + " vs " + rhs.to_string("a"));
    return report;
}

}  // namespace mpath
