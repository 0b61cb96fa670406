#include "autfp/chain.hpp"

#include <fmt/format.h>

namespace autfp {

ChainComplexZ::ChainComplexZ(std::vector<int> dims, std::vector<SparseIntMatrix> differentials)
    : dims_(std::move(dims)), d_(std::move(differentials)) {
    if (d_.size() != dims_.size())
        throw StructuralError("ChainComplexZ: need one differential slot per degree");
    for (int k = 1; k <= top_degree(); ++k) {
        if (d_[k].rows() != dims_[k - 1] || d_[k].cols() != dims_[k])
            throw StructuralError(fmt::format("ChainComplexZ: d_{} has shape {}x{}, want {}x{}",
                                              k, d_[k].rows(), d_[k].cols(), dims_[k - 1], dims_[k]));
        if (k >= 2 && !(d_[k - 1] * d_[k]).is_zero())
            throw StructuralError(fmt::format("ChainComplexZ: d_{} o d_{} != 0", k - 1, k));
    }
    cache_.resize(dims_.size());
}

const RankDivisors& ChainComplexZ::level(int k) const {
    if (!cache_[k]) cache_[k] = sparse_rank_divisors(d_[k]);
    return *cache_[k];
}

FgAbGroup ChainComplexZ::homology(int n) const {
    if (n < 0 || n > top_degree()) return FgAbGroup::zero();
    const int rank_dn = (n == 0) ? 0 : level(n).rank;
    int rank_up = 0;
    std::vector<mpz_class> torsion;
    if (n + 1 <= top_degree()) {
        const RankDivisors& up = level(n + 1);
        rank_up = up.rank;
        for (const auto& d : up.divisors)
            if (d != 1) torsion.push_back(d);
    }
    return normalize_cyclics(dims_[n] - rank_dn - rank_up, torsion);
}

}  // namespace autfp
