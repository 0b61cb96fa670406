#include "autfp/sparse.hpp"

#include <set>
#include <unordered_map>

namespace autfp {

void SparseIntMatrix::add(int i, int j, const mpz_class& v) {
    if (v == 0) return;
    auto& row = row_data_.at(i);
    if (j < 0 || j >= cols_) throw StructuralError("SparseIntMatrix: column out of range");
    auto it = row.find(j);
    if (it == row.end()) {
        row.emplace(j, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

void SparseIntMatrix::set(int i, int j, const mpz_class& v) {
    auto& row = row_data_.at(i);
    if (j < 0 || j >= cols_) throw StructuralError("SparseIntMatrix: column out of range");
    if (v == 0)
        row.erase(j);
    else
        row[j] = v;
}

mpz_class SparseIntMatrix::get(int i, int j) const {
    const auto& row = row_data_.at(i);
    auto it = row.find(j);
    return it == row.end() ? mpz_class(0) : it->second;
}

size_t SparseIntMatrix::nnz() const {
    size_t n = 0;
    for (const auto& r : row_data_) n += r.size();
    return n;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& o) const {
    if (cols_ != o.rows_) throw StructuralError("SparseIntMatrix: incompatible product");
    SparseIntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [k, a] : row_data_[i])
            for (const auto& [j, b] : o.row_data_[k]) r.add(i, j, a * b);
    return r;
}

IntMatrix SparseIntMatrix::dense() const {
    IntMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_data_[i]) m.at(i, j) = v;
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r.set(i, j, m.at(i, j));
    return r;
}

namespace {

// Elimination workspace: live rows/cols shrink as unit pivots are consumed.
struct Workspace {
    std::vector<std::unordered_map<int, mpz_class>> rows;
    std::vector<std::set<int>> col_rows;  // col -> rows with a nonzero entry
    std::set<int> live_rows, live_cols;

    explicit Workspace(const SparseIntMatrix& m) : rows(m.rows()), col_rows(m.cols()) {
        for (int i = 0; i < m.rows(); ++i) {
            live_rows.insert(i);
            for (const auto& [j, v] : m.row(i)) {
                rows[i].emplace(j, v);
                col_rows[j].insert(i);
            }
        }
        for (int j = 0; j < m.cols(); ++j) live_cols.insert(j);
    }

    void set_entry(int i, int j, mpz_class v) {
        auto it = rows[i].find(j);
        if (v == 0) {
            if (it != rows[i].end()) {
                rows[i].erase(it);
                col_rows[j].erase(i);
            }
        } else if (it == rows[i].end()) {
            rows[i].emplace(j, std::move(v));
            col_rows[j].insert(i);
        } else {
            it->second = std::move(v);
        }
    }

    // Find a +-1 entry with minimal fill estimate.
    bool find_unit(int& pi, int& pj) const {
        bool found = false;
        size_t best = 0;
        for (int i : live_rows) {
            for (const auto& [j, v] : rows[i]) {
                if (v != 1 && v != -1) continue;
                size_t score = (rows[i].size() - 1) * (col_rows[j].size() - 1);
                if (!found || score < best) {
                    found = true;
                    best = score;
                    pi = i;
                    pj = j;
                    if (best == 0) return true;
                }
            }
        }
        return found;
    }

    void eliminate(int pi, int pj) {
        const mpz_class pivot = rows[pi].at(pj);  // +-1
        std::vector<int> touched(col_rows[pj].begin(), col_rows[pj].end());
        for (int r : touched) {
            if (r == pi) continue;
            mpz_class factor = rows[r].at(pj) * pivot;  // entry / pivot
            // row_r -= factor * row_pi
            for (const auto& [c, v] : rows[pi]) {
                auto it = rows[r].find(c);
                if (it == rows[r].end()) {
                    rows[r].emplace(c, -factor * v);
                    col_rows[c].insert(r);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        rows[r].erase(it);
                        col_rows[c].erase(r);
                    }
                }
            }
        }
        // row pi's remaining entries die under column ops against the now
        // singleton column pj; just retire the row and column
        for (const auto& [c, v] : rows[pi]) col_rows[c].erase(pi);
        rows[pi].clear();
        live_rows.erase(pi);
        live_cols.erase(pj);
    }
};

}  // namespace

RankDivisors sparse_rank_divisors(const SparseIntMatrix& m) {
    Workspace ws(m);
    RankDivisors out;
    int units = 0;
    int pi, pj;
    while (ws.find_unit(pi, pj)) {
        ws.eliminate(pi, pj);
        ++units;
    }
    for (int k = 0; k < units; ++k) out.divisors.emplace_back(1);
    // dense leftover
    std::vector<int> rmap(ws.live_rows.begin(), ws.live_rows.end());
    std::vector<int> cmap(ws.live_cols.begin(), ws.live_cols.end());
    std::unordered_map<int, int> cidx;
    for (size_t k = 0; k < cmap.size(); ++k) cidx[cmap[k]] = static_cast<int>(k);
    bool any = false;
    IntMatrix rest(static_cast<int>(rmap.size()), static_cast<int>(cmap.size()));
    for (size_t a = 0; a < rmap.size(); ++a)
        for (const auto& [j, v] : ws.rows[rmap[a]]) {
            rest.at(static_cast<int>(a), cidx.at(j)) = v;
            any = true;
        }
    if (any)
        for (auto& d : snf_divisors(rest)) out.divisors.push_back(d);
    out.rank = static_cast<int>(out.divisors.size());
    return out;
}

}  // namespace autfp
