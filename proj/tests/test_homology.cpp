#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "autfp/bar.hpp"
#include "autfp/poset_homology.hpp"
#include "autfp/presentation.hpp"

using namespace autfp;

TEST_CASE("bar homology of small cyclic groups") {
    auto h = group_homology(FiniteGroup::cyclic(2), 3);
    CHECK(h[0].to_string() == "Z");
    CHECK(h[1].to_string() == "Z/2");
    CHECK(h[2].is_zero());
    CHECK(h[3].to_string() == "Z/2");

    auto h3 = group_homology(FiniteGroup::cyclic(3), 3);
    CHECK(h3[1].to_string() == "Z/3");
    CHECK(h3[2].is_zero());
    CHECK(h3[3].to_string() == "Z/3");
}

TEST_CASE("bar homology of the Klein group matches the Kunneth formula") {
    auto h = group_homology(FiniteGroup::klein_four(), 3);
    CHECK(h[0].to_string() == "Z");
    CHECK(h[1].to_string() == "Z/2 + Z/2");
    CHECK(h[2].to_string() == "Z/2");
    std::vector<FgAbGroup> hz2 = group_homology(FiniteGroup::cyclic(2), 3);
    CHECK(kunneth_homology({hz2, hz2}, 2) == h[2]);
    CHECK(kunneth_homology({hz2, hz2}, 3) == h[3]);
}

TEST_CASE("bar homology of S_3") {
    auto h = group_homology(FiniteGroup::symmetric_3(), 3);
    CHECK(h[1].to_string() == "Z/2");
    CHECK(h[2].is_zero());
    CHECK(h[3].to_string() == "Z/6");
}

TEST_CASE("group homology bound is enforced") {
    CHECK_THROWS_AS(group_homology(FiniteGroup::cyclic(9), 2), BoundExceeded);
}

TEST_CASE("abelianization of small presentations") {
    Presentation p;
    p.add_generator("a");
    p.add_relator({1, 1});
    CHECK(p.abelianization().to_string() == "Z/2");

    Presentation q;
    q.add_generator("a");
    q.add_generator("b");
    q.add_relator({1, 2, -1, -2});
    CHECK(q.abelianization().to_string() == "Z^2");
}

TEST_CASE("induced maps on abelianizations") {
    Presentation p;
    p.add_generator("a");
    p.add_relator({1, 1});  // Z/2
    Presentation q;
    q.add_generator("x");
    q.add_relator({1, 1, 1, 1});  // Z/4

    // a |-> x^2: injective, not surjective
    InducedH1 ind = h1_induced_map(p, q, {{1, 1}});
    CHECK(ind.mono);
    CHECK(!ind.epi);
    CHECK(!ind.iso);

    // identity on Z/2
    InducedH1 idm = h1_induced_map(p, p, {{1}});
    CHECK(idm.iso);
    CHECK(idm.normalized == IntMatrix{{1}});

    // to the trivial group everything dies
    Presentation t;
    InducedH1 zero = h1_induced_map(p, t, {{}});
    CHECK(zero.epi);
    CHECK(!zero.mono);

    // a |-> x would violate the relator a^2 in Z/4
    CHECK_THROWS_AS(h1_induced_map(p, q, {{1}}), IncompatibilityError);
}

TEST_CASE("poset homology: points, cones and disjoint unions") {
    // one point with Z/2 coefficients
    PosetView point{1, [](int, int) { return false; }};
    PosetCoefficients z2{
        [](int) { return 1; },
        [](int) { return IntMatrix{{2}}; },
        [](int, int) -> IntMatrix { throw StructuralError("no pairs"); },
    };
    auto h = poset_homology(point, z2, 2);
    CHECK(h[0].to_string() == "Z/2");
    CHECK(h[1].is_zero());
    CHECK(h[2].is_zero());

    // two incomparable points with values Z/2 and Z^1
    PosetView two{2, [](int, int) { return false; }};
    PosetCoefficients mixed{
        [](int) { return 1; },
        [](int i) { return i == 0 ? IntMatrix{{2}} : IntMatrix(1, 0); },
        [](int, int) -> IntMatrix { throw StructuralError("no pairs"); },
    };
    auto h2 = poset_homology(two, mixed, 1);
    CHECK(h2[0].to_string() == "Z + Z/2");
    CHECK(h2[1].is_zero());

    // coefficients induced from the minimum of a cone (value V on the whole
    // upset, identity transports) give V in degree 0 and nothing above
    PosetView vee{3, [](int i, int j) { return i == 0 && j != 0; }};
    PosetCoefficients induced{
        [](int) { return 2; },
        [](int) { return IntMatrix{{3, 0}, {0, 0}}; },
        [](int, int) { return IntMatrix::identity(2); },
    };
    auto h3 = poset_homology(vee, induced, 2);
    CHECK(h3[0].to_string() == "Z + Z/3");
    CHECK(h3[1].is_zero());
    CHECK(h3[2].is_zero());

    // the same value placed on a proper upset of a non-cone poset: the square
    // a,b < c,d with coefficients induced from the upset of a
    PosetView square{4, [](int i, int j) { return i < 2 && j >= 2; }};
    PosetCoefficients upset{
        [](int i) { return i == 1 ? 0 : 2; },
        [](int i) { return i == 1 ? IntMatrix(0, 0) : IntMatrix{{3, 0}, {0, 0}}; },
        [](int i, int) { return i == 1 ? IntMatrix(2, 0) : IntMatrix::identity(2); },
    };
    auto h4 = poset_homology(square, upset, 2);
    CHECK(h4[0].to_string() == "Z + Z/3");
    CHECK(h4[1].is_zero());
    CHECK(h4[2].is_zero());
}

TEST_CASE("poset homology validates functoriality") {
    // chain 0 < 1 < 2 with a deliberately broken composite
    PosetView chain{3, [](int i, int j) { return i < j; }};
    PosetCoefficients broken{
        [](int) { return 1; },
        [](int) { return IntMatrix(1, 0); },
        [](int i, int j) { return (j - i == 1) ? IntMatrix{{1}} : IntMatrix{{2}}; },
    };
    CHECK_THROWS_AS(poset_homology(chain, broken, 1), StructuralError);
}

TEST_CASE("order-complex homology of a circle-like poset") {
    // four elements a < c, a < d, b < c, b < d: the order complex is a circle
    PosetView circle{4, [](int i, int j) { return i < 2 && j >= 2; }};
    auto h = poset_homology_constant(circle, 2);
    CHECK(h[0].to_string() == "Z");
    CHECK(h[1].to_string() == "Z");
    CHECK(h[2].is_zero());
}
