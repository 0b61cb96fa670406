#pragma once

#include <optional>

#include "autfp/matrix.hpp"

namespace autfp {

/// Smith decomposition U*M*V = S with S diagonal, d_1 | d_2 | ... | d_r > 0,
/// U and V unimodular. Uinv/Vinv are the exact integer inverses, maintained
/// alongside so unimodularity is certified by construction.
struct SnfResult {
    IntMatrix S, U, V, Uinv, Vinv;
    int rank = 0;
    std::vector<mpz_class> divisors;  // the nonzero diagonal, in order
};

SnfResult snf(const IntMatrix& m);

/// Diagonal divisors only (no transform tracking); same reduction loop.
std::vector<mpz_class> snf_divisors(const IntMatrix& m);

int int_rank(const IntMatrix& m);

/// Basis of the integer kernel lattice {x : M x = 0}, as matrix columns.
/// The basis is primitive (extends to a unimodular matrix).
IntMatrix kernel_basis(const IntMatrix& m);

/// Solve M X = B over the integers; nullopt when no integral solution exists.
std::optional<IntMatrix> solve(const IntMatrix& m, const IntMatrix& b);

/// Lattice = column span over Z. All lattice values live in a fixed Z^n.

/// A basis (independent columns) for the column span of `gens`.
IntMatrix lattice_basis(const IntMatrix& gens);

/// Generators for span(a) `intersect` span(b).
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

/// Generators for {x : F x in span(l)}.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& l);

bool lattice_contains(const IntMatrix& l, const IntMatrix& vectors);

/// Invariants (free rank, torsion divisors > 1) of big/span(small), where
/// span(small) must be contained in span(big).
struct QuotientInvariants {
    int free_rank = 0;
    std::vector<mpz_class> torsion;  // divisibility chain, entries > 1
};
QuotientInvariants lattice_quotient(const IntMatrix& big, const IntMatrix& small);

/// Invariants of the cokernel Z^rows / span(columns of m).
QuotientInvariants cokernel_invariants(const IntMatrix& m);

}  // namespace autfp
