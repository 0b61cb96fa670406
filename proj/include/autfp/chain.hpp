#pragma once

#include "autfp/abgroup.hpp"
#include "autfp/sparse.hpp"

namespace autfp {

/// Nonnegatively graded chain complex of free Z-modules. d[k] maps C_k to
/// C_{k-1}; d o d = 0 is asserted at assembly time.
class ChainComplexZ {
public:
    ChainComplexZ(std::vector<int> dims, std::vector<SparseIntMatrix> differentials);

    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int k) const { return k >= 0 && k <= top_degree() ? dims_[k] : 0; }
    const SparseIntMatrix& differential(int k) const { return d_.at(k); }

    /// H_n = ker d_n / im d_{n+1}; degrees above the stored top are treated
    /// as zero.
    FgAbGroup homology(int n) const;

private:
    const RankDivisors& level(int k) const;
    std::vector<int> dims_;
    std::vector<SparseIntMatrix> d_;  // d_[k] : C_k -> C_{k-1}; d_[0] is empty
    mutable std::vector<std::optional<RankDivisors>> cache_;
};

}  // namespace autfp
