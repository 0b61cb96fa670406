#pragma once

#include <string>

#include "autfp/snf.hpp"

namespace autfp {

/// Finitely generated abelian group in invariant form:
/// Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, all d_i > 1.
struct FgAbGroup {
    int rank = 0;
    std::vector<mpz_class> torsion;

    FgAbGroup() = default;
    FgAbGroup(int rank_, std::vector<mpz_class> torsion_);

    static FgAbGroup zero() { return FgAbGroup(); }
    static FgAbGroup free(int rank_) { return FgAbGroup(rank_, {}); }
    static FgAbGroup cyclic(long n);
    static FgAbGroup from_invariants(const QuotientInvariants& inv) {
        return FgAbGroup(inv.free_rank, inv.torsion);
    }
    /// Cokernel of the relation matrix (columns are relators in Z^rows).
    static FgAbGroup cokernel(const IntMatrix& relations) {
        return from_invariants(cokernel_invariants(relations));
    }

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    mpz_class torsion_order() const;

    bool operator==(const FgAbGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }

    FgAbGroup direct_sum(const FgAbGroup& o) const;
    FgAbGroup tensor(const FgAbGroup& o) const;
    /// Tor_1^Z(this, o): pairwise gcds of the torsion parts.
    FgAbGroup tor(const FgAbGroup& o) const;

    /// Display form, e.g. "Z^2 + Z/2 + Z/4"; "0" for the trivial group.
    std::string to_string() const;
};

/// Renormalize an arbitrary multiset of cyclic orders (> 0; 0 means Z) plus a
/// free rank into invariant form.
FgAbGroup normalize_cyclics(int free_rank, const std::vector<mpz_class>& orders);

/// H_n of a direct product of groups via the Kunneth formula with torsion,
/// given the full homology tables of the factors (table[i][q] = H_q of factor
/// i, q = 0..n). Factors are folded in pairwise.
FgAbGroup kunneth_homology(const std::vector<std::vector<FgAbGroup>>& factor_tables, int n);

}  // namespace autfp
