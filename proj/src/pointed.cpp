#include "autfp/pointed.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace autfp {

int PointedSetTuple::total_parts() const {
    int n = 0;
    for (const auto& p : parts) n += static_cast<int>(p.size());
    return n;
}

std::string PointedSetTuple::shape_key() const {
    std::string s;
    for (int e = 0; e < coords(); ++e) {
        if (e) s += "|";
        s += std::to_string(parts_at(e));
    }
    return s;
}

PointedSetTuple PointedSetTuple::shape(const std::vector<int>& counts) {
    PointedSetTuple t;
    t.parts.resize(counts.size());
    for (size_t e = 0; e < counts.size(); ++e) t.parts[e].assign(counts[e], {});
    return t;
}

int PointedSetTuple::slot_of(int e, int p) const {
    int s = 0;
    for (int i = 0; i < e; ++i) s += parts_at(i);
    return s + p;
}

std::pair<int, int> PointedSetTuple::coord_part_of_slot(int s) const {
    for (int e = 0; e < coords(); ++e) {
        if (s < parts_at(e)) return {e, s};
        s -= parts_at(e);
    }
    throw StructuralError("PointedSetTuple: slot out of range");
}

GammaEMorphism GammaEMorphism::identity(const PointedSetTuple& x) {
    GammaEMorphism f{x, x, {}};
    f.maps.resize(x.coords());
    for (int e = 0; e < x.coords(); ++e) {
        f.maps[e].resize(x.parts_at(e));
        for (int p = 0; p < x.parts_at(e); ++p) f.maps[e][p] = p;
    }
    return f;
}

GammaEMorphism GammaEMorphism::idempotent(const PointedSetTuple& c,
                                          const std::vector<std::vector<int>>& keep) {
    if (static_cast<int>(keep.size()) != c.coords())
        throw StructuralError("idempotent: coordinate mismatch");
    GammaEMorphism f{c, c, {}};
    f.maps.resize(c.coords());
    for (int e = 0; e < c.coords(); ++e) f.maps[e].assign(c.parts_at(e), -1);
    for (int e = 0; e < c.coords(); ++e)
        for (int p : keep[e]) {
            if (p < 0 || p >= c.parts_at(e))
                throw StructuralError("idempotent: part index out of range");
            f.maps[e][p] = p;
        }
    return f;
}

GammaEMorphism GammaEMorphism::compose_after(const GammaEMorphism& other) const {
    if (!(other.dst == src)) throw StructuralError("GammaEMorphism: not composable");
    GammaEMorphism f{other.src, dst, {}};
    f.maps.resize(other.src.coords());
    for (int e = 0; e < other.src.coords(); ++e) {
        f.maps[e].assign(other.src.parts_at(e), -1);
        for (int p = 0; p < other.src.parts_at(e); ++p) {
            int q = other.maps[e][p];
            if (q >= 0) f.maps[e][p] = maps[e][q];
        }
    }
    return f;
}

bool GammaEMorphism::is_identity() const {
    if (!(src == dst)) return false;
    for (int e = 0; e < src.coords(); ++e)
        for (int p = 0; p < src.parts_at(e); ++p)
            if (maps[e][p] != p) return false;
    return true;
}

std::vector<int> GammaEMorphism::slot_map() const {
    std::vector<int> m;
    for (int e = 0; e < src.coords(); ++e)
        for (int p = 0; p < src.parts_at(e); ++p)
            m.push_back(maps[e][p] >= 0 ? dst.slot_of(e, maps[e][p]) : -1);
    return m;
}

namespace {

void labels_below(const MuteNode& m, std::vector<int>& out);

void labels_below(const LabelNode& l, std::vector<int>& out) {
    out.push_back(l.label);
    for (const auto& m : l.children) labels_below(m, out);
}

void labels_below(const MuteNode& m, std::vector<int>& out) {
    for (const auto& l : m.children) labels_below(l, out);
}

// For each label e: the label sets under each mute child of the vertex
// labelled e (= the non-root components of A - e).
void collect_parts(const LabelNode& l, std::vector<std::vector<std::vector<int>>>& parts) {
    auto& mine = parts[l.label];
    for (const auto& m : l.children) {
        std::vector<int> labels;
        labels_below(m, labels);
        std::sort(labels.begin(), labels.end());
        mine.push_back(std::move(labels));
        for (const auto& c : m.children) collect_parts(c, parts);
    }
    std::sort(mine.begin(), mine.end());
}

}  // namespace

PointedSetTuple fe_object(const TreeJ& a) {
    PointedSetTuple t;
    t.parts.resize(a.label_count());
    for (const auto& l : a.top().children) collect_parts(l, t.parts);
    return t;
}

GammaEMorphism fe_morphism(const TreeJ& a, const TreeJ& b) {
    if (!fold_leq(a, b)) throw StructuralError("fe_morphism: arguments are not comparable");
    PointedSetTuple pa = fe_object(a);
    PointedSetTuple pb = fe_object(b);
    GammaEMorphism f{pb, pa, {}};
    f.maps.resize(pb.coords());
    for (int e = 0; e < pb.coords(); ++e) {
        f.maps[e].assign(pb.parts_at(e), -1);
        for (int p = 0; p < pb.parts_at(e); ++p) {
            const auto& fine = pb.parts[e][p];
            for (int q = 0; q < pa.parts_at(e); ++q) {
                const auto& coarse = pa.parts[e][q];
                if (std::includes(coarse.begin(), coarse.end(), fine.begin(), fine.end())) {
                    f.maps[e][p] = q;
                    break;
                }
            }
            if (f.maps[e][p] < 0) {
                // the fine part must then be absorbed whole into the root
                // component: no coarse part may meet it
                for (int q = 0; q < pa.parts_at(e); ++q)
                    for (int lbl : fine)
                        if (std::binary_search(pa.parts[e][q].begin(), pa.parts[e][q].end(), lbl))
                            throw StructuralError("fe_morphism: partitions do not refine");
            }
        }
    }
    return f;
}

}  // namespace autfp
