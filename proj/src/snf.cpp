#include "autfp/snf.hpp"

namespace autfp {

namespace {

// Shared reduction loop. When track is false the transform matrices stay empty.
struct Reducer {
    IntMatrix S, U, V, Uinv, Vinv;
    bool track;

    explicit Reducer(const IntMatrix& m, bool track_) : S(m), track(track_) {
        if (track) {
            U = IntMatrix::identity(m.rows());
            Uinv = IntMatrix::identity(m.rows());
            V = IntMatrix::identity(m.cols());
            Vinv = IntMatrix::identity(m.cols());
        }
    }

    void row_swap(int i, int j) {
        S.swap_rows(i, j);
        if (track) { U.swap_rows(i, j); Uinv.swap_cols(i, j); }
    }
    void col_swap(int i, int j) {
        S.swap_cols(i, j);
        if (track) { V.swap_cols(i, j); Vinv.swap_rows(i, j); }
    }
    // row_dst += f * row_src
    void row_add(int dst, int src, const mpz_class& f) {
        S.add_row_multiple(dst, src, f);
        if (track) { U.add_row_multiple(dst, src, f); Uinv.add_col_multiple(src, dst, -f); }
    }
    void col_add(int dst, int src, const mpz_class& f) {
        S.add_col_multiple(dst, src, f);
        if (track) { V.add_col_multiple(dst, src, f); Vinv.add_row_multiple(src, dst, -f); }
    }
    void row_negate(int i) {
        S.negate_row(i);
        if (track) { U.negate_row(i); Uinv.negate_col(i); }
    }

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        mpz_class best;
        for (int i = t; i < S.rows(); ++i)
            for (int j = t; j < S.cols(); ++j) {
                const mpz_class& v = S.at(i, j);
                if (v == 0) continue;
                mpz_class a = abs(v);
                if (!found || a < best) { found = true; best = a; pi = i; pj = j; }
                if (best == 1) return true;
            }
        return found;
    }

    // One division pass against the pivot at (t,t). Leaves remainders in the
    // pivot row/column; returns true when both came out clean.
    bool reduce_once(int t) {
        mpz_class q;
        bool clean = true;
        for (int i = t + 1; i < S.rows(); ++i) {
            if (S.at(i, t) == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), S.at(i, t).get_mpz_t(), S.at(t, t).get_mpz_t());
            row_add(i, t, -q);
            if (S.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < S.cols(); ++j) {
            if (S.at(t, j) == 0) continue;
            mpz_fdiv_q(q.get_mpz_t(), S.at(t, j).get_mpz_t(), S.at(t, t).get_mpz_t());
            col_add(j, t, -q);
            if (S.at(t, j) != 0) clean = false;
        }
        return clean;
    }

    void run() {
        const int n = std::min(S.rows(), S.cols());
        for (int t = 0; t < n; ++t) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            for (;;) {
                // always reduce against the smallest entry of the block, so
                // pivots shrink monotonically and entries stay tame
                row_swap(t, pi);
                col_swap(t, pj);
                if (reduce_once(t)) {
                    bool divides_all = true;
                    for (int i = t + 1; i < S.rows() && divides_all; ++i)
                        for (int j = t + 1; j < S.cols(); ++j)
                            if (S.at(i, j) % S.at(t, t) != 0) {
                                row_add(t, i, 1);
                                divides_all = false;
                                break;
                            }
                    if (divides_all) break;
                }
                find_pivot(t, pi, pj);
            }
            if (S.at(t, t) < 0) row_negate(t);
        }
    }
};

}  // namespace

SnfResult snf(const IntMatrix& m) {
    Reducer red(m, true);
    red.run();
    SnfResult res{std::move(red.S), std::move(red.U), std::move(red.V),
                  std::move(red.Uinv), std::move(red.Vinv)};
    const int n = std::min(res.S.rows(), res.S.cols());
    for (int i = 0; i < n && res.S.at(i, i) != 0; ++i) {
        res.divisors.push_back(res.S.at(i, i));
        ++res.rank;
    }
    return res;
}

std::vector<mpz_class> snf_divisors(const IntMatrix& m) {
    Reducer red(m, false);
    red.run();
    std::vector<mpz_class> div;
    const int n = std::min(red.S.rows(), red.S.cols());
    for (int i = 0; i < n && red.S.at(i, i) != 0; ++i) div.push_back(red.S.at(i, i));
    return div;
}

int int_rank(const IntMatrix& m) { return static_cast<int>(snf_divisors(m).size()); }

IntMatrix kernel_basis(const IntMatrix& m) {
    SnfResult res = snf(m);
    std::vector<int> keep;
    for (int j = res.rank; j < m.cols(); ++j) keep.push_back(j);
    return res.V.select_cols(keep);
}

std::optional<IntMatrix> solve(const IntMatrix& m, const IntMatrix& b) {
    if (b.rows() != m.rows()) throw StructuralError("solve: shape mismatch");
    SnfResult res = snf(m);
    IntMatrix y = res.U * b;
    IntMatrix z(m.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        for (int i = 0; i < m.rows(); ++i) {
            if (i < res.rank) {
                if (y.at(i, c) % res.S.at(i, i) != 0) return std::nullopt;
                if (i < m.cols()) z.at(i, c) = y.at(i, c) / res.S.at(i, i);
            } else if (y.at(i, c) != 0) {
                return std::nullopt;
            }
        }
    }
    return res.V * z;
}

IntMatrix lattice_basis(const IntMatrix& gens) {
    // col span(gens) = col span(Uinv * S); basis columns are d_j * Uinv[:,j]
    SnfResult res = snf(gens);
    IntMatrix basis(gens.rows(), res.rank);
    for (int j = 0; j < res.rank; ++j)
        for (int i = 0; i < gens.rows(); ++i)
            basis.at(i, j) = res.Uinv.at(i, j) * res.S.at(j, j);
    return basis;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw StructuralError("lattice_intersection: ambient mismatch");
    if (a.cols() == 0 || b.cols() == 0) return IntMatrix(a.rows(), 0);
    // work with bases so repeated intersections stay small
    IntMatrix ab = lattice_basis(a);
    IntMatrix bb = lattice_basis(b);
    for (int j = 0; j < bb.cols(); ++j) bb.negate_col(j);
    IntMatrix k = kernel_basis(ab.hconcat(bb));
    return ab * k.submatrix(0, 0, ab.cols(), k.cols());
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& l) {
    if (f.rows() != l.rows()) throw StructuralError("preimage_lattice: ambient mismatch");
    IntMatrix k = kernel_basis(f.hconcat(l));
    return k.submatrix(0, 0, f.cols(), k.cols());
}

bool lattice_contains(const IntMatrix& l, const IntMatrix& vectors) {
    return solve(l, vectors).has_value();
}

QuotientInvariants lattice_quotient(const IntMatrix& big, const IntMatrix& small) {
    IntMatrix basis = lattice_basis(big);
    auto x = solve(basis, small);
    if (!x) throw StructuralError("lattice_quotient: small is not contained in big");
    QuotientInvariants inv;
    std::vector<mpz_class> div = snf_divisors(*x);
    inv.free_rank = basis.cols() - static_cast<int>(div.size());
    for (auto& d : div)
        if (d != 1) inv.torsion.push_back(d);
    return inv;
}

QuotientInvariants cokernel_invariants(const IntMatrix& m) {
    QuotientInvariants inv;
    std::vector<mpz_class> div = snf_divisors(m);
    inv.free_rank = m.rows() - static_cast<int>(div.size());
    for (auto& d : div)
        if (d != 1) inv.torsion.push_back(d);
    return inv;
}

}  // namespace autfp
