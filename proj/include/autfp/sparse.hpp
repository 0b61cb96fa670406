#pragma once

#include <map>

#include "autfp/matrix.hpp"
#include "autfp/snf.hpp"

namespace autfp {

/// Sparse integer matrix, row-major maps. Used for chain complexes where the
/// dense reducer would be too slow; unit pivots are eliminated sparsely and
/// only the small leftover block goes through the dense Smith reduction.
class SparseIntMatrix {
public:
    SparseIntMatrix() : rows_(0), cols_(0) {}
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int i, int j, const mpz_class& v);
    void set(int i, int j, const mpz_class& v);
    mpz_class get(int i, int j) const;

    const std::map<int, mpz_class>& row(int i) const { return row_data_[i]; }

    size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    SparseIntMatrix operator*(const SparseIntMatrix& o) const;
    IntMatrix dense() const;
    static SparseIntMatrix from_dense(const IntMatrix& m);

private:
    int rows_, cols_;
    std::vector<std::map<int, mpz_class>> row_data_;
};

struct RankDivisors {
    int rank = 0;
    std::vector<mpz_class> divisors;  // full divisor list including 1s
};

/// Rank and elementary divisors via unit-pivot sparse elimination, then dense
/// Smith reduction of the remainder.
RankDivisors sparse_rank_divisors(const SparseIntMatrix& m);

}  // namespace autfp
