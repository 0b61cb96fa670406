#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "autfp/abgroup.hpp"
#include "autfp/snf.hpp"
#include "autfp/sparse.hpp"

using namespace autfp;

namespace {

void check_certificates(const IntMatrix& m, const SnfResult& r) {
    CHECK(r.U * m * r.V == r.S);
    CHECK(r.U * r.Uinv == IntMatrix::identity(m.rows()));
    CHECK(r.V * r.Vinv == IntMatrix::identity(m.cols()));
    for (size_t i = 1; i < r.divisors.size(); ++i)
        CHECK(r.divisors[i] % r.divisors[i - 1] == 0);
    for (const auto& d : r.divisors) CHECK(d > 0);
    // off-diagonal zero
    for (int i = 0; i < r.S.rows(); ++i)
        for (int j = 0; j < r.S.cols(); ++j)
            if (i != j) CHECK(r.S.at(i, j) == 0);
}

}  // namespace

TEST_CASE("snf of the identity is the identity") {
    IntMatrix m = IntMatrix::identity(4);
    SnfResult r = snf(m);
    CHECK(r.S == m);
    CHECK(r.rank == 4);
}

TEST_CASE("snf diagonalizes the textbook 2x2 example") {
    IntMatrix m{{2, 4}, {6, 8}};
    SnfResult r = snf(m);
    check_certificates(m, r);
    REQUIRE(r.divisors.size() == 2);
    CHECK(r.divisors[0] == 2);
    CHECK(r.divisors[1] == 4);
}

TEST_CASE("snf of the zero matrix has empty diagonal") {
    IntMatrix m(3, 5);
    SnfResult r = snf(m);
    CHECK(r.rank == 0);
    CHECK(r.S.is_zero());
}

TEST_CASE("snf fuzz: certificates hold on random matrices") {
    std::mt19937_64 rng(20240815);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 12);
        const int cols = 1 + static_cast<int>(rng() % 12);
        IntMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = static_cast<long>(rng() % 201) - 100;
        SnfResult r = snf(m);
        check_certificates(m, r);
        // the divisor-only path agrees
        std::vector<mpz_class> d = snf_divisors(m);
        CHECK(d == r.divisors);
        // and the sparse path agrees
        RankDivisors rd = sparse_rank_divisors(SparseIntMatrix::from_dense(m));
        CHECK(rd.rank == r.rank);
        std::vector<mpz_class> nontrivial_dense, nontrivial_sparse;
        for (const auto& x : r.divisors)
            if (x != 1) nontrivial_dense.push_back(x);
        for (const auto& x : rd.divisors)
            if (x != 1) nontrivial_sparse.push_back(x);
        CHECK(nontrivial_dense == nontrivial_sparse);
    }
}

TEST_CASE("kernel basis spans the kernel") {
    IntMatrix m{{1, 2, 3}, {2, 4, 6}};
    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
}

TEST_CASE("solve finds integral solutions and rejects non-solvable systems") {
    IntMatrix m{{2, 0}, {0, 3}};
    IntMatrix b{{4}, {9}};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
    IntMatrix bad{{1}, {1}};
    CHECK(!solve(m, bad).has_value());
}

TEST_CASE("lattice intersection of 2Z^2 and the diagonal") {
    IntMatrix a{{2, 0}, {0, 2}};
    IntMatrix b{{1}, {1}};
    IntMatrix inter = lattice_intersection(a, b);
    // intersection = multiples of (2,2)
    QuotientInvariants q = lattice_quotient(b, inter);
    CHECK(q.free_rank == 0);
    REQUIRE(q.torsion.size() == 1);
    CHECK(q.torsion[0] == 2);
}

TEST_CASE("preimage lattice of a sublattice") {
    // f(x,y) = x + y; preimage of 3Z is {(x,y) : x+y = 0 mod 3}
    IntMatrix f{{1, 1}};
    IntMatrix l{{3}};
    IntMatrix pre = preimage_lattice(f, l);
    QuotientInvariants q = lattice_quotient(IntMatrix::identity(2), pre);
    CHECK(q.free_rank == 0);
    REQUIRE(q.torsion.size() == 1);
    CHECK(q.torsion[0] == 3);
}

TEST_CASE("abelian group arithmetic") {
    FgAbGroup z2 = FgAbGroup::cyclic(2);
    FgAbGroup z4 = FgAbGroup::cyclic(4);
    FgAbGroup z = FgAbGroup::free(1);
    CHECK(z2.direct_sum(z4).to_string() == "Z/2 + Z/4");
    CHECK(z4.direct_sum(z2).to_string() == "Z/2 + Z/4");
    CHECK(normalize_cyclics(0, {mpz_class(2), mpz_class(3)}).to_string() == "Z/6");
    CHECK(z.tensor(z4).to_string() == "Z/4");
    CHECK(z2.tensor(z4).to_string() == "Z/2");
    CHECK(z2.tor(z4).to_string() == "Z/2");
    CHECK(z.tor(z4).is_zero());
}

TEST_CASE("kunneth: degree-3 homology of Z/2 x Z/2 from the factor tables") {
    // H_*(Z/2) = Z, Z/2, 0, Z/2
    std::vector<FgAbGroup> h_z2 = {FgAbGroup::free(1), FgAbGroup::cyclic(2), FgAbGroup::zero(),
                                   FgAbGroup::cyclic(2)};
    FgAbGroup h2 = kunneth_homology({h_z2, h_z2}, 2);
    CHECK(h2.to_string() == "Z/2");  // the H_1 (x) H_1 term
    FgAbGroup h3 = kunneth_homology({h_z2, h_z2}, 3);
    CHECK(h3.to_string() == "Z/2 + Z/2 + Z/2");
    // product with the trivial group changes nothing
    std::vector<FgAbGroup> triv = {FgAbGroup::free(1), FgAbGroup::zero(), FgAbGroup::zero(),
                                   FgAbGroup::zero()};
    CHECK(kunneth_homology({h_z2, triv}, 3) == h_z2[3]);
    // degree-1 additivity
    std::vector<FgAbGroup> h_z3 = {FgAbGroup::free(1), FgAbGroup::cyclic(3), FgAbGroup::zero(),
                                   FgAbGroup::cyclic(3)};
    CHECK(kunneth_homology({h_z2, h_z3}, 1).to_string() == "Z/6");
}
