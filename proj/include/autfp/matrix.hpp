#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace autfp {

/// Errors raised when inputs violate a structural precondition
/// (malformed tables, label mismatches, non-composable morphisms, ...).
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Errors raised when an input exceeds a configured size bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw StructuralError("IntMatrix: negative dimension");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpz_class& at(int i, int j) { return data_[idx(i, j)]; }
    const mpz_class& at(int i, int j) const { return data_[idx(i, j)]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;

    IntMatrix transpose() const;

    /// Columns of `o` appended on the right.
    IntMatrix hconcat(const IntMatrix& o) const;
    /// Rows of `o` appended below.
    IntMatrix vconcat(const IntMatrix& o) const;
    IntMatrix submatrix(int r0, int c0, int nrows, int ncols) const;
    IntMatrix column(int j) const { return submatrix(0, j, rows_, 1); }
    /// Keep the listed rows, in order.
    IntMatrix select_rows(const std::vector<int>& keep) const;
    IntMatrix select_cols(const std::vector<int>& keep) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const mpz_class& factor);
    void add_col_multiple(int dst, int src, const mpz_class& factor);
    void negate_row(int i);
    void negate_col(int j);

    std::string to_string() const;

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw StructuralError("IntMatrix: index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }
    int rows_, cols_;
    std::vector<mpz_class> data_;
};

}  // namespace autfp
