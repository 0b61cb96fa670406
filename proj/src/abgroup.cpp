#include "autfp/abgroup.hpp"

#include <sstream>

namespace autfp {

FgAbGroup::FgAbGroup(int rank_, std::vector<mpz_class> torsion_) : rank(rank_) {
    *this = normalize_cyclics(rank_, torsion_);
}

FgAbGroup FgAbGroup::cyclic(long n) {
    if (n < 0) throw StructuralError("FgAbGroup::cyclic: negative order");
    FgAbGroup g;
    if (n == 0)
        g.rank = 1;
    else if (n > 1)
        g.torsion.emplace_back(n);
    return g;
}

mpz_class FgAbGroup::torsion_order() const {
    mpz_class t = 1;
    for (const auto& d : torsion) t *= d;
    return t;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& o) const {
    std::vector<mpz_class> orders = torsion;
    orders.insert(orders.end(), o.torsion.begin(), o.torsion.end());
    return normalize_cyclics(rank + o.rank, orders);
}

FgAbGroup FgAbGroup::tensor(const FgAbGroup& o) const {
    // (Z^r + sum Z/d) x (Z^s + sum Z/e)
    std::vector<mpz_class> orders;
    for (const auto& d : torsion)
        for (int k = 0; k < o.rank; ++k) orders.push_back(d);
    for (const auto& e : o.torsion)
        for (int k = 0; k < rank; ++k) orders.push_back(e);
    mpz_class g;
    for (const auto& d : torsion)
        for (const auto& e : o.torsion) {
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
            orders.push_back(g);
        }
    return normalize_cyclics(rank * o.rank, orders);
}

FgAbGroup FgAbGroup::tor(const FgAbGroup& o) const {
    std::vector<mpz_class> orders;
    mpz_class g;
    for (const auto& d : torsion)
        for (const auto& e : o.torsion) {
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
            orders.push_back(g);
        }
    return normalize_cyclics(0, orders);
}

std::string FgAbGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << (rank == 1 ? "Z" : "Z^" + std::to_string(rank));
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbGroup normalize_cyclics(int free_rank, const std::vector<mpz_class>& orders) {
    FgAbGroup g;
    g.rank = free_rank;
    std::vector<mpz_class> nontrivial;
    for (const auto& d : orders) {
        if (d < 0) throw StructuralError("normalize_cyclics: negative order");
        if (d == 0)
            ++g.rank;
        else if (d != 1)
            nontrivial.push_back(d);
    }
    if (nontrivial.empty()) return g;
    // Smith form of the diagonal matrix of the orders gives the chain.
    IntMatrix diag(static_cast<int>(nontrivial.size()), static_cast<int>(nontrivial.size()));
    for (size_t i = 0; i < nontrivial.size(); ++i)
        diag.at(static_cast<int>(i), static_cast<int>(i)) = nontrivial[i];
    for (auto& d : snf_divisors(diag))
        if (d != 1) g.torsion.push_back(d);
    return g;
}

FgAbGroup kunneth_homology(const std::vector<std::vector<FgAbGroup>>& factor_tables, int n) {
    if (factor_tables.empty()) return n == 0 ? FgAbGroup::free(1) : FgAbGroup::zero();
    // running = homology table of the product of the factors folded so far
    std::vector<FgAbGroup> running = factor_tables[0];
    if (static_cast<int>(running.size()) <= n)
        throw StructuralError("kunneth_homology: factor table too short");
    for (size_t f = 1; f < factor_tables.size(); ++f) {
        const auto& t = factor_tables[f];
        if (static_cast<int>(t.size()) <= n)
            throw StructuralError("kunneth_homology: factor table too short");
        std::vector<FgAbGroup> next(n + 1);
        for (int m = 0; m <= n; ++m) {
            FgAbGroup h;
            for (int p = 0; p <= m; ++p) h = h.direct_sum(running[p].tensor(t[m - p]));
            for (int p = 0; p <= m - 1; ++p) h = h.direct_sum(running[p].tor(t[m - 1 - p]));
            next[m] = h;
        }
        running = std::move(next);
    }
    return running[n];
}

}  // namespace autfp
