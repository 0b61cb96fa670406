#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "autfp/group.hpp"

using namespace autfp;

namespace {

// brute-force oracle: every bijection fixing 0, tested for multiplicativity
int count_automorphisms_brute(const FiniteGroup& g) {
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    int count = 0;
    do {
        if (perm[0] != 0) continue;
        bool ok = true;
        for (int a = 0; a < g.order() && ok; ++a)
            for (int b = 0; b < g.order() && ok; ++b)
                if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("built-in tables are valid groups") {
    CHECK(FiniteGroup::cyclic(5).order() == 5);
    CHECK(FiniteGroup::klein_four().order() == 4);
    CHECK(FiniteGroup::symmetric_3().order() == 6);
    CHECK(FiniteGroup::symmetric_3().element_order(1) == 3);
}

TEST_CASE("table file parsing") {
    std::istringstream in("order 2\n0 1\n1 0\n");
    FiniteGroup g = FiniteGroup::from_stream(in, "file");
    CHECK(g.order() == 2);
    CHECK(g.mul(1, 1) == 0);

    std::istringstream bad("order 2\n1 0\n0 1\n");
    CHECK_THROWS_AS(FiniteGroup::from_stream(bad, "bad"), StructuralError);
}

TEST_CASE("abelianizations of the built-ins") {
    CHECK(FiniteGroup::cyclic(4).abelianization().to_string() == "Z/4");
    CHECK(FiniteGroup::klein_four().abelianization().to_string() == "Z/2 + Z/2");
    CHECK(FiniteGroup::symmetric_3().abelianization().to_string() == "Z/2");
}

TEST_CASE("automorphism groups match the brute-force count") {
    CHECK(automorphism_group(FiniteGroup::cyclic(2)).size() == 1);
    CHECK(automorphism_group(FiniteGroup::cyclic(3)).size() == 2);
    CHECK(automorphism_group(FiniteGroup::symmetric_3()).size() == 6);
    CHECK(automorphism_group(FiniteGroup::klein_four()).size() == 6);
    for (auto g : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                   FiniteGroup::klein_four(), FiniteGroup::symmetric_3()})
        CHECK(static_cast<int>(automorphism_group(g).size()) == count_automorphisms_brute(g));
}

TEST_CASE("automorphism entries are automorphisms") {
    FiniteGroup g = FiniteGroup::symmetric_3();
    for (const auto& t : automorphism_group(g)) {
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) CHECK(t[g.mul(a, b)] == g.mul(t[a], t[b]));
    }
}

TEST_CASE("the order bound is enforced") {
    CHECK_THROWS_AS(automorphism_group(FiniteGroup::cyclic(13)), BoundExceeded);
}

TEST_CASE("family parsing and classes") {
    GroupFamily fam = parse_family("Z2,Z3,Z2,S3");
    CHECK(fam.size() == 4);
    auto classes = fam.table_classes();
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<int>{0, 2});
    CHECK(classes[1] == std::vector<int>{1});
    CHECK(fam.to_string() == "Z2,Z3,Z2,S3");
    CHECK(fam.subfamily({1, 3}).to_string() == "Z3,S3");
}
