#include "autfp/bar.hpp"

#include <fmt/format.h>

namespace autfp {

ChainComplexZ bar_complex(const FiniteGroup& g, int top_degree) {
    const int m = g.order() - 1;  // nontrivial elements, shifted by one
    std::vector<int> dims(top_degree + 1);
    std::vector<SparseIntMatrix> d(top_degree + 1);
    auto dim = [&](int k) {
        long long n = 1;
        for (int i = 0; i < k; ++i) n *= m;
        return static_cast<int>(n);
    };
    for (int k = 0; k <= top_degree; ++k) dims[k] = dim(k);
    for (int k = 1; k <= top_degree; ++k) {
        SparseIntMatrix dk(dims[k - 1], dims[k]);
        std::vector<int> tuple(k);
        for (int idx = 0; idx < dims[k]; ++idx) {
            int t = idx;
            for (int i = 0; i < k; ++i) {
                tuple[i] = t % m + 1;
                t /= m;
            }
            auto encode = [&](const std::vector<int>& tup) {
                int code = 0;
                for (int i = static_cast<int>(tup.size()) - 1; i >= 0; --i)
                    code = code * m + (tup[i] - 1);
                return code;
            };
            int sign = 1;
            // drop the first entry
            {
                std::vector<int> face(tuple.begin() + 1, tuple.end());
                dk.add(encode(face), idx, sign);
            }
            // multiply adjacent entries; tuples hitting the identity vanish
            for (int i = 0; i + 1 < k; ++i) {
                sign = -sign;
                int prod = g.mul(tuple[i], tuple[i + 1]);
                if (prod == 0) continue;
                std::vector<int> face;
                face.reserve(k - 1);
                for (int j = 0; j < k; ++j) {
                    if (j == i) {
                        face.push_back(prod);
                        ++j;  // skip the merged neighbour
                    } else {
                        face.push_back(tuple[j]);
                    }
                }
                dk.add(encode(face), idx, sign);
            }
            // drop the last entry
            sign = -sign;
            {
                std::vector<int> face(tuple.begin(), tuple.end() - 1);
                dk.add(encode(face), idx, sign);
            }
        }
        d[k] = std::move(dk);
    }
    return ChainComplexZ(std::move(dims), std::move(d));
}

std::vector<FgAbGroup> group_homology(const FiniteGroup& g, int nmax, int max_order) {
    if (g.order() > max_order)
        throw BoundExceeded(fmt::format("group_homology: order {} exceeds bound {}",
                                        g.order(), max_order));
    ChainComplexZ c = bar_complex(g, nmax + 1);
    std::vector<FgAbGroup> h;
    for (int n = 0; n <= nmax; ++n) h.push_back(c.homology(n));
    return h;
}

}  // namespace autfp
