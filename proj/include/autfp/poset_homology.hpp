#pragma once

#include <functional>

#include "autfp/chain.hpp"

namespace autfp {

/// Finite poset given by its strict order relation.
struct PosetView {
    int size = 0;
    std::function<bool(int, int)> less;  // strict
};

/// Covariant coefficient system: a presented abelian group per element and a
/// generator-level matrix (gens(i) -> gens(j) columns-to-columns) for every
/// comparable pair i <= j, compatible with the relations.
struct PosetCoefficients {
    std::function<int(int)> ngens;
    std::function<IntMatrix(int)> relations;     // gens(i) x (#relators)
    std::function<IntMatrix(int, int)> action;   // for i < j: gens(j) x gens(i)
};

/// H_n(P; M) for n <= nmax, computed from the simplicial replacement
/// C_n = sum over chains x_0 < ... < x_n of M(x_0), with each coefficient
/// group resolved by its Smith normal form so the total complex is free.
/// Functoriality of M over sampled triples is validated first; failures
/// raise StructuralError.
std::vector<FgAbGroup> poset_homology(const PosetView& p, const PosetCoefficients& m, int nmax,
                                      bool validate = true);

/// Constant coefficients: the order-complex homology of the poset.
std::vector<FgAbGroup> poset_homology_constant(const PosetView& p, int nmax);

}  // namespace autfp
