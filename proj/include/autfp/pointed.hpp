#pragma once

#include "autfp/tree.hpp"

namespace autfp {

/// Tuple of finite pointed sets, one per label. Only the non-base parts are
/// stored; the basepoint is implicit in every coordinate. Parts may carry the
/// label set of the tree component they came from (empty for abstract shapes).
struct PointedSetTuple {
    /// parts[e] = names of the non-base parts at coordinate e; a part name is
    /// the sorted list of labels in that component.
    std::vector<std::vector<std::vector<int>>> parts;

    int coords() const { return static_cast<int>(parts.size()); }
    int parts_at(int e) const { return static_cast<int>(parts[e].size()); }
    int total_parts() const;

    /// Shape key "c0|c1|...": coordinatewise part counts.
    std::string shape_key() const;
    static PointedSetTuple shape(const std::vector<int>& counts);

    /// Flat slot numbering, coordinate-major.
    int slot_of(int e, int p) const;
    std::pair<int, int> coord_part_of_slot(int s) const;

    bool operator==(const PointedSetTuple&) const = default;
};

/// Morphism of Gamma^E: per coordinate a partially defined map of non-base
/// parts (undefined = sent to the basepoint), basepoints preserved.
struct GammaEMorphism {
    PointedSetTuple src, dst;
    /// maps[e][p] = part index in dst at coordinate e, or -1 when undefined.
    std::vector<std::vector<int>> maps;

    static GammaEMorphism identity(const PointedSetTuple& x);
    /// The idempotent d_{C,M}: identity on the parts in `keep`, undefined
    /// elsewhere. keep[e] lists part indices at coordinate e.
    static GammaEMorphism idempotent(const PointedSetTuple& c,
                                     const std::vector<std::vector<int>>& keep);

    bool defined(int e, int p) const { return maps[e][p] >= 0; }
    /// this after other.
    GammaEMorphism compose_after(const GammaEMorphism& other) const;
    bool is_identity() const;

    /// Flat slot-level map, coordinate-major (-1 = undefined).
    std::vector<int> slot_map() const;

    bool operator==(const GammaEMorphism&) const = default;
};

/// F_E on objects: for each label e, the connected components of A minus the
/// vertex labelled e, other than the root's component. Parts are named by
/// their label sets and ordered by minimal label.
PointedSetTuple fe_object(const TreeJ& a);

/// F_E on a relation a <= b: the map sending a part of the finer partition
/// (at b) to the part of the coarser one (at a) containing it; undefined on
/// parts absorbed into the root component. Checks fold_leq(a, b).
GammaEMorphism fe_morphism(const TreeJ& a, const TreeJ& b);

}  // namespace autfp
