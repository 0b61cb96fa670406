#pragma once

#include <memory>
#include <random>

#include "autfp/abgroup.hpp"
#include "autfp/group.hpp"
#include "autfp/pointed.hpp"

namespace autfp {

enum class Variance { Covariant, Contravariant };

/// Morphism datum between diagram objects: a per-slot partial map.
struct SlotMorphism {
    int src = -1, dst = -1;     // object ids
    std::vector<int> map;       // per src slot: dst slot index or -1

    std::string key() const;
    /// this after other (other.dst must equal this->src).
    SlotMorphism compose_after(const SlotMorphism& other) const;
    bool is_identity() const;
};

struct FunctorObject {
    PointedSetTuple shape;
    std::string key;
    int ngens = 0;
    IntMatrix relations;  // ngens x r
};

/// Rule-based functor: values and actions computable for any concrete
/// morphism of pointed-set tuples. Rules are immutable and reentrant.
class FunctorRule {
public:
    virtual ~FunctorRule() = default;
    virtual Variance variance() const = 0;
    virtual std::string name() const = 0;
    /// Presentation (generator count, relation matrix) of T at the shape.
    virtual std::pair<int, IntMatrix> value(const PointedSetTuple& x) const = 0;
    /// Matrix of T on the morphism f: src -> dst given by slot_map.
    /// Contravariant: gens(src) x gens(dst), representing T(dst) -> T(src).
    /// Covariant:     gens(dst) x gens(src), representing T(src) -> T(dst).
    virtual IntMatrix action(const PointedSetTuple& src, const PointedSetTuple& dst,
                             const std::vector<int>& slot_map) const = 0;
};

/// Finite tabulated functor: an object list plus stored action matrices for
/// the diagram's morphisms. Immutable after construction.
class TabulatedFunctor {
public:
    TabulatedFunctor(Variance v, std::string name) : variance_(v), name_(std::move(name)) {}

    Variance variance() const { return variance_; }
    const std::string& name() const { return name_; }
    int object_count() const { return static_cast<int>(objects_.size()); }
    const FunctorObject& object(int id) const { return objects_.at(id); }
    int object_id(const std::string& shape_key) const;
    int object_id(const PointedSetTuple& t) const { return object_id(t.shape_key()); }
    int find_object(const std::string& shape_key) const;  // -1 when absent

    int add_object(const PointedSetTuple& shape, int ngens, IntMatrix relations);
    void set_action(const SlotMorphism& f, IntMatrix m);
    bool has_action(const SlotMorphism& f) const;
    const IntMatrix& action(const SlotMorphism& f) const;
    const std::vector<SlotMorphism>& stored_morphisms() const { return stored_; }

    FgAbGroup value_group(int id) const;

    SlotMorphism identity_morphism(int obj) const;
    /// d_{C,U}: partial identity defined exactly on the listed slots.
    SlotMorphism idempotent(int obj, const std::vector<int>& slots) const;

    /// Identities act as identity matrices and stored composable pairs whose
    /// composite is stored agree with it, modulo the target's relations.
    /// Throws StructuralError on a violation.
    void validate(size_t pair_limit = 20000) const;

private:
    Variance variance_;
    std::string name_;
    std::vector<FunctorObject> objects_;
    std::unordered_map<std::string, int> index_;
    std::unordered_map<std::string, IntMatrix> actions_;
    std::vector<SlotMorphism> stored_;
};

/// Materialize a rule over the given objects and morphisms; identities and
/// all idempotents d_{C,U} are always included.
TabulatedFunctor materialize(const FunctorRule& rule, const std::vector<PointedSetTuple>& shapes,
                             const std::vector<std::pair<PointedSetTuple,
                                                         std::pair<PointedSetTuple, std::vector<int>>>>&
                                 extra_morphisms = {});

/// Cross effect cr_M(T)(C): intersection of the kernels of the proper
/// sub-idempotents with the image of d_{C,M}, as a subgroup of T(C).
struct CrossEffect {
    FgAbGroup group;
    IntMatrix inclusion;  // columns generate the subgroup in T(C) coordinates
};
CrossEffect cross_effect(const TabulatedFunctor& t, int obj, const std::vector<int>& slots);
/// Full cross effect cr(T)(C) (all slots).
CrossEffect full_cross_effect(const TabulatedFunctor& t, int obj);

enum class DegreeVerdict { True, False, Undecided };
/// True iff T(empty) = 0 and cr(T)(C) = 0 for every diagram object with more
/// than d slots; Undecided when the diagram cannot witness the bound.
DegreeVerdict polynomial_degree_at_most(const TabulatedFunctor& t, int d);

/// --- concrete rules -----------------------------------------------------

/// Constant functor at a fixed group (every action is the identity).
std::unique_ptr<FunctorRule> constant_rule(const FgAbGroup& value, Variance v);

/// Free abelian group on the slots; covariant, transport-with-kill.
std::unique_ptr<FunctorRule> additive_free_rule();

/// Contravariant H_1 of the stabilizer groups: X maps to the direct sum over
/// slots (e, P) of the abelianization of G_e.
std::unique_ptr<FunctorRule> h1_stabilizer_rule(const GroupFamily& fam);

/// Covariant representable Z[ens(Y, -)]: basis the everywhere-defined tuple
/// maps from Y, morphisms acting by postcomposition (killing partiality).
std::unique_ptr<FunctorRule> representable_rule(const PointedSetTuple& y);

/// One summand of a contravariant presheaf sum: Z[Hom(-, Y)], optionally
/// reduced by the everywhere-undefined morphism and with mod-m coefficients.
struct PresheafTerm {
    PointedSetTuple y;
    bool reduced = true;
    long torsion = 0;  // 0 = Z coefficients
};
std::unique_ptr<FunctorRule> presheaf_sum_rule(std::vector<PresheafTerm> terms);

/// Seeded random presheaf sum over shapes bounded by the given coordinate
/// count and total part budget.
std::unique_ptr<FunctorRule> random_presheaf_rule(int coords, int max_total_parts,
                                                  std::mt19937_64& rng);

/// Tensor product over the tabulated diagram (a finite coend): generators
/// t (x) u over all objects, modulo the bimodule relations from every stored
/// morphism. Used as an independent oracle for cr_Y identifications.
FgAbGroup tensor_over_diagram(const TabulatedFunctor& t, const FunctorRule& covariant_rule);

/// All Gamma^E morphisms between two shapes (coordinate-preserving partial
/// maps on parts), as slot maps.
std::vector<std::vector<int>> all_partial_maps(const PointedSetTuple& src,
                                               const PointedSetTuple& dst);

}  // namespace autfp
