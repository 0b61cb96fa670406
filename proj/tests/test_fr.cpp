#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "autfp/fr.hpp"
#include "autfp/functor_json.hpp"

using namespace autfp;

namespace {

GroupFamily copies(const FiniteGroup& g, int n) {
    auto shared = std::make_shared<FiniteGroup>(g);
    return GroupFamily(std::vector<std::shared_ptr<const FiniteGroup>>(n, shared));
}

}  // namespace

TEST_CASE("FR presentation of two Z/2 factors") {
    FRPresentation fr = fr_presentation(copies(FiniteGroup::cyclic(2), 2));
    CHECK(fr.pres.ngens() == 2);
    CHECK(fr.pres.abelianization().to_string() == "Z/2 + Z/2");
}

TEST_CASE("FR presentation of a single factor is trivial") {
    FRPresentation fr = fr_presentation(copies(FiniteGroup::symmetric_3(), 1));
    CHECK(fr.pres.ngens() == 0);
    CHECK(fr.pres.abelianization().is_zero());
}

TEST_CASE("FR abelianization of three Z/3 factors") {
    FRPresentation fr = fr_presentation(copies(FiniteGroup::cyclic(3), 3));
    CHECK(fr.pres.abelianization().to_string() == "Z/3 + Z/3 + Z/3 + Z/3 + Z/3 + Z/3");
}

TEST_CASE("every emitted relator is an automorphism identity") {
    GroupFamily fam = GroupFamily::of({FiniteGroup::cyclic(3), FiniteGroup::cyclic(2),
                                       FiniteGroup::symmetric_3()});
    FRPresentation fr = fr_presentation(fam);
    for (const auto& rel : fr.pres.relators) CHECK(fr.evaluate(rel).is_identity_action(fam));
}

TEST_CASE("relation variant report") {
    GroupFamily fam = copies(FiniteGroup::cyclic(3), 3);
    auto reports = relations_report(fam);
    REQUIRE(reports.size() == 5);
    // r1 both ways (abelian factors), r2-corrected, r3-corrected hold
    CHECK(reports[0].violations == 0);
    CHECK(reports[1].violations == 0);
    CHECK(reports[3].violations == 0);
    CHECK(reports[4].violations == 0);
    // r2 as printed crosses the superscripts and fails
    CHECK(reports[2].violations > 0);

    // with S_3 factors the two readings of r1 differ
    auto nonab = relations_report(copies(FiniteGroup::symmetric_3(), 2));
    CHECK(nonab[0].violations == 0);
    CHECK(nonab[1].violations > 0);
}

TEST_CASE("relation variants hold for every factor multiset of order <= 4, |E| <= 4") {
    const std::vector<FiniteGroup> pool = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                           FiniteGroup::cyclic(4), FiniteGroup::klein_four()};
    std::vector<std::shared_ptr<const FiniteGroup>> shared;
    for (const auto& g : pool) shared.push_back(std::make_shared<FiniteGroup>(g));
    std::vector<int> pick;
    std::function<void(size_t, int)> rec = [&](size_t from, int remaining) {
        if (pick.size() >= 2) {
            std::vector<std::shared_ptr<const FiniteGroup>> fs;
            for (int i : pick) fs.push_back(shared[i]);
            auto reports = relations_report(GroupFamily(fs));
            CHECK(reports[0].violations == 0);  // r1 (abelian factors: both readings)
            CHECK(reports[1].violations == 0);
            CHECK(reports[3].violations == 0);  // r2 corrected
            CHECK(reports[4].violations == 0);  // r3 corrected
        }
        if (remaining == 0) return;
        for (size_t i = from; i < pool.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            rec(i, remaining - 1);
            pick.pop_back();
        }
    };
    rec(0, 4);
}

TEST_CASE("three-way H_1 agreement on sample families") {
    std::vector<GroupFamily> fams = {
        copies(FiniteGroup::cyclic(2), 2),
        copies(FiniteGroup::cyclic(2), 3),
        GroupFamily::of({FiniteGroup::cyclic(4), FiniteGroup::symmetric_3()}),
        GroupFamily::of({FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::klein_four()}),
        // factor orders up to six
        GroupFamily::of({FiniteGroup::cyclic(5), FiniteGroup::cyclic(6)}),
        GroupFamily::of({FiniteGroup::cyclic(6), FiniteGroup::symmetric_3(), FiniteGroup::cyclic(5)}),
        copies(FiniteGroup::cyclic(5), 4),
    };
    for (const auto& fam : fams) {
        FgAbGroup direct = h1_fr_direct_formula(fam);
        CHECK(fr_presentation(fam).pres.abelianization() == direct);
        CHECK(h1_fr_formula(fam) == direct);
    }
    GroupFamily z4s3 = GroupFamily::of({FiniteGroup::cyclic(4), FiniteGroup::symmetric_3()});
    CHECK(h1_fr_formula(z4s3).to_string() == "Z/2 + Z/4");
}

TEST_CASE("three-way H_1 agreement for every multiset of order <= 6 factors, |E| <= 3") {
    const std::vector<FiniteGroup> pool = {
        FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(5), FiniteGroup::cyclic(6), FiniteGroup::klein_four(),
        FiniteGroup::symmetric_3()};
    std::vector<std::shared_ptr<const FiniteGroup>> shared;
    for (const auto& g : pool) shared.push_back(std::make_shared<FiniteGroup>(g));
    std::vector<int> pick;
    std::function<void(size_t, int)> rec = [&](size_t from, int remaining) {
        if (!pick.empty()) {
            std::vector<std::shared_ptr<const FiniteGroup>> fs;
            for (int i : pick) fs.push_back(shared[i]);
            GroupFamily fam(fs);
            FgAbGroup direct = h1_fr_direct_formula(fam);
            CHECK(fr_presentation(fam).pres.abelianization() == direct);
            CHECK(h1_fr_formula(fam) == direct);
        }
        if (remaining == 0) return;
        for (size_t i = from; i < pool.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            rec(i, remaining - 1);
            pick.pop_back();
        }
    };
    rec(0, 3);
}

TEST_CASE("inclusion-induced map on FR abelianizations is the block inclusion") {
    GroupFamily sub = parse_family("Z2,Z3");
    GroupFamily sup = parse_family("Z2,Z3,Z4");
    FRPresentation fr_sub = fr_presentation(sub);
    FRPresentation fr_sup = fr_presentation(sup);
    std::vector<std::vector<int>> images;
    for (const auto& g : fr_sub.gens)
        images.push_back({fr_sup.gen_id(g.i, g.j, g.g) + 1});
    InducedH1 ind = h1_induced_map(fr_sub.pres, fr_sup.pres, images);
    CHECK(ind.mono);
    CHECK(!ind.epi);
    CHECK(ind.src == h1_fr_direct_formula(sub));
    // the complement of the image is the sum over the pairs meeting the new
    // label
    FgAbGroup fresh;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j || (i < 2 && j < 2)) continue;
            fresh = fresh.direct_sum(sup.factor(i).abelianization());
        }
    QuotientInvariants coker =
        cokernel_invariants(ind.exponent_matrix.hconcat(fr_sup.pres.relation_matrix()));
    CHECK(FgAbGroup::from_invariants(coker) == fresh);
}

TEST_CASE("stabilizer map on the minimal tree is trivial") {
    GroupFamily fam = copies(FiniteGroup::cyclic(2), 2);
    StabilizerModel model(TreeJ::minimal(2), fam);
    CHECK(model.size == 1);
    CHECK(model.image({}).is_identity_action(fam));
}

TEST_CASE("stabilizer map on the 2-chain has image {id, a[0,1,g]}") {
    GroupFamily fam = copies(FiniteGroup::cyclic(2), 2);
    TreeJ chain = TreeJ::parse("(*(m(0(m(1)))))");
    StabilizerModel model(chain, fam);
    CHECK(model.size == 2);
    StabilizerCheck check = verify_stabilizer_map(chain, fam);
    CHECK(check.pass());
    auto gen = SymmetricAutomorphism::whitehead_generator(0, 1, 1, fam);
    CHECK(model.image({1}).same_action(gen, fam));
}

TEST_CASE("stabilizer maps verify on all trees over small families") {
    for (const auto& fam : {copies(FiniteGroup::cyclic(2), 3), copies(FiniteGroup::cyclic(3), 2)}) {
        for (const TreeJ& a : enumerate_trees(fam.size())) {
            StabilizerCheck check = verify_stabilizer_map(a, fam);
            CHECK(check.pass());
            CHECK(!check.sampled);
        }
    }
}

TEST_CASE("dec-pira for the constant functor on two labels") {
    TreePoset poset = TreePoset::full(2);
    TreeDiagram diagram = build_tree_diagram(poset);
    auto rule = constant_rule(FgAbGroup::free(1), Variance::Contravariant);
    TabulatedFunctor t = materialize_on_trees(*rule, diagram);
    DecPiraReport rep = dec_pira_check(poset, diagram, t, 1);
    CHECK(rep.pass);
    CHECK(rep.lhs == "Z");
    CHECK(rep.rhs == "Z");
}

TEST_CASE("dec-pira for the H_1 coefficients of (Z/2, Z/2)") {
    GroupFamily fam = copies(FiniteGroup::cyclic(2), 2);
    TreePoset poset = TreePoset::full(2);
    TreeDiagram diagram = build_tree_diagram(poset);
    auto rule = h1_stabilizer_rule(fam);
    TabulatedFunctor t = materialize_on_trees(*rule, diagram);
    DecPiraReport rep = dec_pira_check(poset, diagram, t, 1);
    CHECK(rep.pass);
    CHECK(rep.lhs == "Z/2 + Z/2");
}

TEST_CASE("dec-pira for seeded random functors on three labels") {
    TreePoset poset = TreePoset::full(3);
    TreeDiagram diagram = build_tree_diagram(poset);
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 3; ++trial) {
        auto rule = random_presheaf_rule(3, 2, rng);
        TabulatedFunctor t = materialize_on_trees(*rule, diagram);
        DecPiraReport rep = dec_pira_check(poset, diagram, t, 2);
        CHECK(rep.pass);
    }
}

TEST_CASE("dec-pira summands are natural along everywhere-defined inclusions") {
    // an inclusion of label sets embeds the bivalent subfamily and matches
    // the corresponding cross-effect summands
    GroupFamily small = GroupFamily::of({FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)});
    GroupFamily big = GroupFamily::of(
        {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4)});
    ThetaMorphism inc = ThetaMorphism::inclusion(2, 3);

    std::vector<PointedSetTuple> small_shapes, big_shapes;
    std::vector<std::pair<TreeJ, TreeJ>> matched;
    std::set<std::string> s1, s2;
    for (const TreeJ& a : enumerate_trees(2)) {
        if (!a.in_fancy_f()) continue;
        TreeJ b = jf_map(inc, a);
        CHECK(b.in_fancy_f());
        // the tuple of components is unchanged apart from the new basepoint
        // coordinate
        PointedSetTuple pa = fe_object(a), pb = fe_object(b);
        for (int e = 0; e < 2; ++e) CHECK(pa.parts[e] == pb.parts[e]);
        CHECK(pb.parts_at(2) == 0);
        matched.push_back({a, b});
        if (s1.insert(pa.shape_key()).second) small_shapes.push_back(pa);
        if (s2.insert(pb.shape_key()).second) big_shapes.push_back(pb);
    }
    auto rule_small = h1_stabilizer_rule(small);
    auto rule_big = h1_stabilizer_rule(big);
    TabulatedFunctor ts = materialize(*rule_small, small_shapes);
    TabulatedFunctor tb = materialize(*rule_big, big_shapes);
    for (const auto& [a, b] : matched)
        CHECK(full_cross_effect(ts, ts.object_id(fe_object(a))).group ==
              full_cross_effect(tb, tb.object_id(fe_object(b))).group);
}

TEST_CASE("dec-pira replays identically from the serialized functor") {
    TreePoset poset = TreePoset::full(2);
    TreeDiagram diagram = build_tree_diagram(poset);
    std::mt19937_64 rng(2718);
    auto rule = random_presheaf_rule(2, 2, rng);
    TabulatedFunctor t = materialize_on_trees(*rule, diagram);
    DecPiraReport original = dec_pira_check(poset, diagram, t, 1);
    TabulatedFunctor replayed = functor_from_json(functor_to_json(t));
    DecPiraReport again = dec_pira_check(poset, diagram, replayed, 1);
    CHECK(original.pass == again.pass);
    CHECK(original.lhs == again.lhs);
    CHECK(original.rhs == again.rhs);
}

TEST_CASE("degree bound for H_1 of FR over the subset diagram") {
    GroupFamily fam = copies(FiniteGroup::cyclic(4), 3);
    auto rule = h1_fr_theta_rule(fam);
    TabulatedFunctor t = materialize(*rule, theta_subset_shapes(3));
    t.validate();
    CHECK(polynomial_degree_at_most(t, 2) == DegreeVerdict::True);
    CHECK(full_cross_effect(t, t.object_id(PointedSetTuple::shape({1, 1, 1}))).group.is_zero());
    // degree 1 fails: two-label subsets carry a nonzero cross effect
    CHECK(polynomial_degree_at_most(t, 1) == DegreeVerdict::False);
}

TEST_CASE("sigma-aut presentation for one Z/2 factor is trivial") {
    SigmaAutPresentation p = sigma_aut_presentation(copies(FiniteGroup::cyclic(2), 1));
    CHECK(p.pres.abelianization().is_zero());
}

TEST_CASE("sigma-aut abelianization for two Z/2 factors") {
    SigmaAutPresentation p = sigma_aut_presentation(copies(FiniteGroup::cyclic(2), 2));
    CHECK(p.pres.abelianization().to_string() == "Z/2 + Z/2");
}

TEST_CASE("sigma-aut abelianization with nonabelian factors") {
    // two S_3 factors: the partial-conjugation block contributes one Z/2 (the
    // factor abelianizations, merged by the swap), the factor automorphisms
    // another, and the swap itself a third
    SigmaAutPresentation p = sigma_aut_presentation(copies(FiniteGroup::symmetric_3(), 2));
    CHECK(p.pres.abelianization().to_string() == "Z/2 + Z/2 + Z/2");
    // one factor alone: only Aut(S_3) = S_3 remains
    SigmaAutPresentation q = sigma_aut_presentation(copies(FiniteGroup::symmetric_3(), 1));
    CHECK(q.pres.abelianization().to_string() == "Z/2");
}

TEST_CASE("permutation conjugation sends generators to relabelled generators") {
    // sanity for the conjugation search inside the assembly: s a[0,1,g] s^-1 acts
    // like a[1,0,g]
    GroupFamily fam = copies(FiniteGroup::cyclic(3), 2);
    std::vector<int> perm = {1, 0};
    std::vector<std::vector<int>> iso(2, {0, 1, 2});
    auto s = SymmetricAutomorphism::block(perm, iso, fam);
    auto a = SymmetricAutomorphism::whitehead_generator(0, 1, 2, fam);
    auto conj = s.then(a, fam).then(s.inverse(), fam);
    CHECK(conj.same_action(SymmetricAutomorphism::whitehead_generator(1, 0, 2, fam), fam));
}

TEST_CASE("stability table for Z/2 flags isomorphisms from the stable range") {
    StabilityTable table = stability_h1_table(FiniteGroup::cyclic(2), 5);
    CHECK(!table.truncated);
    const auto& rows = table.rows;
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].h1 == "0");
    for (int n = 2; n <= 5; ++n) CHECK(rows[n - 1].h1 == "Z/2 + Z/2");
    CHECK(!rows[0].iso);  // 0 -> (Z/2)^2 cannot be an isomorphism
    CHECK(rows[0].epi == false);
    for (int n = 4; n <= 4; ++n) CHECK(rows[n - 1].iso);
}

TEST_CASE("mixed-family inclusion per the second stability theorem") {
    GroupFamily sub = parse_family("Z2,Z2,Z2,Z2,Z3");
    GroupFamily sup = parse_family("Z2,Z2,Z2,Z2,Z2,Z3");
    InclusionH1 inc = sigma_aut_inclusion_h1(sub, sup);
    CHECK(inc.iso);
}
