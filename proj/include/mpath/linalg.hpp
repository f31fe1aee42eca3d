#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mpath {

struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p);
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

// Row-major sparse matrix over Q. Rows hold (column, value) pairs sorted by column.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Accumulates into (r, c). Call compress() before reading.
    void add(std::size_t r, std::size_t c, const mpq_class& v) { data_[r].emplace_back(c, v); }
    void compress();

    const std::vector<std::pair<std::size_t, mpq_class>>& row(std::size_t r) const { return data_[r]; }
    std::vector<std::pair<std::size_t, mpq_class>>& row(std::size_t r) { return data_[r]; }
    mpq_class at(std::size_t r, std::size_t c) const;
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<std::size_t, mpq_class>>> data_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Fraction-free Gaussian elimination on a dense big-integer copy.
std::size_t rank_bareiss(const SparseMatrix& m);

// Gaussian elimination over F_p; throws BadParameters if a denominator vanishes mod p.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);

std::size_t rank(const SparseMatrix& m, const FieldSpec& f);

}  // namespace mpath
