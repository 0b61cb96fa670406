#include "autfp/matrix.hpp"

#include <sstream>

namespace autfp {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
        if (static_cast<int>(row.size()) != cols_)
            throw StructuralError("IntMatrix: ragged initializer");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw StructuralError("IntMatrix: incompatible product");
    IntMatrix r(rows_, o.cols_);
    mpz_class acc;
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const mpz_class& b = o.at(k, j);
                if (b == 0) continue;
                acc = a * b;
                r.at(i, j) += acc;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructuralError("IntMatrix: incompatible difference");
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw StructuralError("IntMatrix: incompatible sum");
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw StructuralError("IntMatrix: hconcat row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw StructuralError("IntMatrix: vconcat col mismatch");
    IntMatrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

IntMatrix IntMatrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw StructuralError("IntMatrix: submatrix out of range");
    IntMatrix r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& keep) const {
    IntMatrix r(static_cast<int>(keep.size()), cols_);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(keep[i], j);
    return r;
}

IntMatrix IntMatrix::select_cols(const std::vector<int>& keep) const {
    IntMatrix r(rows_, static_cast<int>(keep.size()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = at(i, keep[j]);
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& factor) {
    if (factor == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& factor) {
    if (factor == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace autfp
