#pragma once

#include "autfp/automorphism.hpp"
#include "autfp/functor.hpp"
#include "autfp/poset_homology.hpp"
#include "autfp/presentation.hpp"

namespace autfp {

/// Presentation of FR(G): generators a[i,j,g] for i != j and g nontrivial in
/// G_i, relators the verified variant of the partial-conjugation relations.
/// Every relator is checked to hold as an automorphism identity before it is
/// emitted; a failing relator is a hard error naming it.
struct FRPresentation {
    Presentation pres;
    struct Gen {
        int i, j, g;
    };
    std::vector<Gen> gens;
    GroupFamily fam;

    /// Generator id; g == 0 yields -1 (the empty word).
    int gen_id(int i, int j, int g) const;
    SymmetricAutomorphism gen_automorphism(int id) const;
    /// Evaluate a signed relator word as an automorphism.
    SymmetricAutomorphism evaluate(const std::vector<int>& word) const;
};

FRPresentation fr_presentation(const GroupFamily& fam);

/// Direct evaluation of the H_1 formula: the sum over ordered pairs i != j
/// of the abelianizations of the G_i.
FgAbGroup h1_fr_direct_formula(const GroupFamily& fam);

/// The cross-effect pipeline: sum over the bivalent-tree subfamily of the
/// full cross effects of the tabulated H_1 coefficient functor.
FgAbGroup h1_fr_formula(const GroupFamily& fam, int max_labels = 6);

/// Status of each printed/corrected variant of the relation families, tested
/// as automorphism identities on every instance over the family.
struct RelationVariantReport {
    std::string variant;
    int instances = 0;
    int violations = 0;
    std::string first_violation;
};
std::vector<RelationVariantReport> relations_report(const GroupFamily& fam);

/// The stabilizer model of a tree: one factor copy per non-base part.
struct StabilizerModel {
    TreeJ tree;
    GroupFamily fam;
    PointedSetTuple parts;       // fe_object(tree)
    std::vector<int> slot_label; // coordinate of each slot
    long size = 1;               // product of the factor orders over the slots

    StabilizerModel(const TreeJ& a, const GroupFamily& f);
    /// The product of partial-conjugation generators attached to an element
    /// (one factor element per slot).
    SymmetricAutomorphism image(const std::vector<int>& element) const;
    std::vector<std::vector<int>> elements() const;  // all tuples
};

struct StabilizerCheck {
    int domain_size = 0;
    bool sampled = false;
    bool multiplicative = true;
    bool injective = true;
    bool image_exact = true;  // image = subgroup generated by the supported
                              // Whitehead automorphisms
    std::vector<std::string> witnesses;
    bool pass() const { return multiplicative && injective && image_exact; }
};
StabilizerCheck verify_stabilizer_map(const TreeJ& a, const GroupFamily& fam,
                                      long pair_bound = 4096);

/// dec-pira: H_0(J_E; T o F_E) against the cross-effect sum, and vanishing of
/// the higher homology.
struct DecPiraReport {
    std::string statement, instance;
    std::string lhs, rhs;  // H_0 on both routes
    std::vector<std::string> higher;
    bool pass = false;
    std::vector<std::string> witnesses;
};

/// Shapes and fe-morphisms of the tree diagram, ready for materialize().
struct TreeDiagram {
    const TreePoset* poset;
    std::vector<PointedSetTuple> shapes;
    std::vector<std::pair<PointedSetTuple, std::pair<PointedSetTuple, std::vector<int>>>> morphisms;
    std::vector<int> object_of_tree;  // poset index -> shape object position
};
TreeDiagram build_tree_diagram(const TreePoset& poset);

TabulatedFunctor materialize_on_trees(const FunctorRule& rule, const TreeDiagram& diagram);

DecPiraReport dec_pira_check(const TreePoset& poset, const TreeDiagram& diagram,
                             const TabulatedFunctor& t, int nmax);

/// Presentation of the symmetric automorphism group as the semidirect product
/// of FR with the factor automorphisms and the table-class permutations.
struct SigmaAutPresentation {
    Presentation pres;
    GroupFamily fam;
};
SigmaAutPresentation sigma_aut_presentation(const GroupFamily& fam, int aut_bound = 12);

/// Canonical label injection of a subfamily into a family: the k-th factor of
/// each table class maps to the k-th factor of the matching class.
std::vector<int> canonical_inclusion(const GroupFamily& sub, const GroupFamily& sup);

struct InclusionH1 {
    std::string sub_h1, sup_h1;
    bool iso = false, epi = false, mono = false;
};
/// H_1 of the symmetric automorphism groups along the canonical inclusion.
InclusionH1 sigma_aut_inclusion_h1(const GroupFamily& sub, const GroupFamily& sup,
                                   int aut_bound = 12);

struct StabilityRow {
    int n = 0;
    std::string h1;
    bool has_map = false;  // the map from this row to the next
    bool iso = false, epi = false, mono = false;
};
struct StabilityTable {
    std::vector<StabilityRow> rows;
    bool truncated = false;  // a resource bound cut the table short
    std::string truncation_reason;
};
/// H_1(Sigma Aut(G^{*n})) for n = 1..max_n with the induced maps n -> n+1.
/// Rows are independent jobs and are built concurrently; hitting a resource
/// bound yields a partial table with the truncation flagged.
StabilityTable stability_h1_table(const FiniteGroup& g, int max_n, int aut_bound = 12);

/// Tabulated functor M |-> H_1(FR(G_M)) over the subsets of the label set,
/// encoded with one slot per present label; covariant.
std::unique_ptr<FunctorRule> h1_fr_theta_rule(const GroupFamily& fam);
std::vector<PointedSetTuple> theta_subset_shapes(int labels);

}  // namespace autfp
