#pragma once

#include "autfp/chain.hpp"
#include "autfp/group.hpp"

namespace autfp {

/// Truncated normalized bar complex of a finite group with Z coefficients:
/// C_k is free on k-tuples of nontrivial elements, faces multiply adjacent
/// entries (tuples containing the identity die).
ChainComplexZ bar_complex(const FiniteGroup& g, int top_degree);

/// H_n(G; Z) for n <= nmax via the bar complex. Refuses |G| > max_order.
std::vector<FgAbGroup> group_homology(const FiniteGroup& g, int nmax, int max_order = 8);

}  // namespace autfp
