#include "autfp/functor.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "autfp/sparse.hpp"

namespace autfp {

std::string SlotMorphism::key() const {
    std::string s = fmt::format("{}>{}|", src, dst);
    for (size_t i = 0; i < map.size(); ++i) s += (i ? "," : "") + std::to_string(map[i]);
    return s;
}

SlotMorphism SlotMorphism::compose_after(const SlotMorphism& other) const {
    if (other.dst != src) throw StructuralError("SlotMorphism: not composable");
    SlotMorphism r{other.src, dst, std::vector<int>(other.map.size(), -1)};
    for (size_t s = 0; s < other.map.size(); ++s)
        if (other.map[s] >= 0) r.map[s] = map[other.map[s]];
    return r;
}

bool SlotMorphism::is_identity() const {
    if (src != dst) return false;
    for (size_t s = 0; s < map.size(); ++s)
        if (map[s] != static_cast<int>(s)) return false;
    return true;
}

int TabulatedFunctor::object_id(const std::string& shape_key) const {
    auto it = index_.find(shape_key);
    if (it == index_.end())
        throw StructuralError(fmt::format("TabulatedFunctor: unknown object '{}'", shape_key));
    return it->second;
}

int TabulatedFunctor::find_object(const std::string& shape_key) const {
    auto it = index_.find(shape_key);
    return it == index_.end() ? -1 : it->second;
}

int TabulatedFunctor::add_object(const PointedSetTuple& shape, int ngens, IntMatrix relations) {
    const std::string key = shape.shape_key();
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    FunctorObject obj{shape, key, ngens, std::move(relations)};
    if (obj.relations.rows() != ngens)
        throw StructuralError("TabulatedFunctor: relation matrix height mismatch");
    objects_.push_back(std::move(obj));
    index_[key] = object_count() - 1;
    return object_count() - 1;
}

void TabulatedFunctor::set_action(const SlotMorphism& f, IntMatrix m) {
    const FunctorObject& s = object(f.src);
    const FunctorObject& d = object(f.dst);
    const int want_rows = variance_ == Variance::Contravariant ? s.ngens : d.ngens;
    const int want_cols = variance_ == Variance::Contravariant ? d.ngens : s.ngens;
    if (m.rows() != want_rows || m.cols() != want_cols)
        throw StructuralError(fmt::format("TabulatedFunctor: action shape {}x{}, want {}x{}",
                                          m.rows(), m.cols(), want_rows, want_cols));
    if (actions_.emplace(f.key(), std::move(m)).second) stored_.push_back(f);
}

bool TabulatedFunctor::has_action(const SlotMorphism& f) const {
    return actions_.count(f.key()) > 0;
}

const IntMatrix& TabulatedFunctor::action(const SlotMorphism& f) const {
    auto it = actions_.find(f.key());
    if (it == actions_.end())
        throw StructuralError(
            fmt::format("TabulatedFunctor '{}': missing action for {}", name_, f.key()));
    return it->second;
}

FgAbGroup TabulatedFunctor::value_group(int id) const {
    return FgAbGroup::cokernel(object(id).relations);
}

SlotMorphism TabulatedFunctor::identity_morphism(int obj) const {
    const int n = object(obj).shape.total_parts();
    SlotMorphism f{obj, obj, std::vector<int>(n)};
    for (int s = 0; s < n; ++s) f.map[s] = s;
    return f;
}

SlotMorphism TabulatedFunctor::idempotent(int obj, const std::vector<int>& slots) const {
    const int n = object(obj).shape.total_parts();
    SlotMorphism f{obj, obj, std::vector<int>(n, -1)};
    for (int s : slots) {
        if (s < 0 || s >= n) throw StructuralError("idempotent: slot out of range");
        f.map[s] = s;
    }
    return f;
}

void TabulatedFunctor::validate(size_t pair_limit) const {
    for (int id = 0; id < object_count(); ++id) {
        const SlotMorphism ident = identity_morphism(id);
        if (has_action(ident)) {
            const IntMatrix& m = action(ident);
            IntMatrix diff = m - IntMatrix::identity(object(id).ngens);
            if (!diff.is_zero() && !lattice_contains(object(id).relations, diff))
                throw StructuralError(fmt::format(
                    "TabulatedFunctor '{}': identity of object {} does not act as identity",
                    name_, id));
        }
    }
    size_t checked = 0;
    for (const SlotMorphism& f : stored_) {
        for (const SlotMorphism& g : stored_) {
            if (g.src != f.dst) continue;
            SlotMorphism h = g.compose_after(f);
            if (!has_action(h)) continue;
            if (++checked > pair_limit) return;
            IntMatrix expect, got;
            int target;
            if (variance_ == Variance::Contravariant) {
                got = action(f) * action(g);
                target = f.src;
            } else {
                got = action(g) * action(f);
                target = g.dst;
            }
            expect = action(h);
            IntMatrix diff = got - expect;
            if (!diff.is_zero() && !lattice_contains(object(target).relations, diff))
                throw StructuralError(
                    fmt::format("TabulatedFunctor '{}': composition violated at {} ; {}",
                                name_, f.key(), g.key()));
        }
    }
}

TabulatedFunctor materialize(
    const FunctorRule& rule, const std::vector<PointedSetTuple>& shapes,
    const std::vector<std::pair<PointedSetTuple, std::pair<PointedSetTuple, std::vector<int>>>>&
        extra_morphisms) {
    TabulatedFunctor t(rule.variance(), rule.name());
    for (const auto& s : shapes) {
        auto [ngens, rel] = rule.value(s);
        t.add_object(s, ngens, std::move(rel));
    }
    // identities and all sub-idempotents
    for (int id = 0; id < t.object_count(); ++id) {
        const PointedSetTuple& shape = t.object(id).shape;
        const int n = shape.total_parts();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> slots;
            for (int s = 0; s < n; ++s)
                if (mask & (1u << s)) slots.push_back(s);
            SlotMorphism f = t.idempotent(id, slots);
            t.set_action(f, rule.action(shape, shape, f.map));
        }
    }
    for (const auto& [src, rest] : extra_morphisms) {
        const auto& [dst, map] = rest;
        SlotMorphism f{t.object_id(src), t.object_id(dst), map};
        t.set_action(f, rule.action(src, dst, map));
    }
    return t;
}

namespace {

std::vector<int> all_slots(const TabulatedFunctor& t, int obj) {
    std::vector<int> s(t.object(obj).shape.total_parts());
    for (size_t i = 0; i < s.size(); ++i) s[i] = static_cast<int>(i);
    return s;
}

}  // namespace

CrossEffect cross_effect(const TabulatedFunctor& t, int obj, const std::vector<int>& slots) {
    const FunctorObject& c = t.object(obj);
    const IntMatrix& rel = c.relations;
    // image of d_{C,M}
    const IntMatrix& dm = t.action(t.idempotent(obj, slots));
    IntMatrix current = dm.hconcat(rel);
    // kernels of the proper sub-idempotents
    const int k = static_cast<int>(slots.size());
    for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(slots[i]);
        const IntMatrix& du = t.action(t.idempotent(obj, sub));
        IntMatrix ker = preimage_lattice(du, rel);
        current = lattice_intersection(current, ker.hconcat(rel));
    }
    CrossEffect ce;
    IntMatrix with_rel = current.hconcat(rel);
    ce.group = FgAbGroup::from_invariants(lattice_quotient(with_rel, rel));
    ce.inclusion = lattice_basis(with_rel);
    return ce;
}

CrossEffect full_cross_effect(const TabulatedFunctor& t, int obj) {
    return cross_effect(t, obj, all_slots(t, obj));
}

DegreeVerdict polynomial_degree_at_most(const TabulatedFunctor& t, int d) {
    int empty_obj = -1;
    bool witness = false;
    for (int id = 0; id < t.object_count(); ++id) {
        if (t.object(id).shape.total_parts() == 0) empty_obj = id;
        if (t.object(id).shape.total_parts() > d) witness = true;
    }
    if (empty_obj < 0 || !witness) return DegreeVerdict::Undecided;
    if (!t.value_group(empty_obj).is_zero()) return DegreeVerdict::False;
    for (int id = 0; id < t.object_count(); ++id) {
        if (t.object(id).shape.total_parts() <= d) continue;
        if (!full_cross_effect(t, id).group.is_zero()) return DegreeVerdict::False;
    }
    return DegreeVerdict::True;
}

/// --- rules ----------------------------------------------------------------

namespace {

struct ConstantRule final : FunctorRule {
    FgAbGroup val;
    Variance var;
    ConstantRule(FgAbGroup v, Variance var_) : val(std::move(v)), var(var_) {}
    Variance variance() const override { return var; }
    std::string name() const override { return fmt::format("const({})", val.to_string()); }
    std::pair<int, IntMatrix> value(const PointedSetTuple&) const override {
        const int n = val.rank + static_cast<int>(val.torsion.size());
        IntMatrix rel(n, static_cast<int>(val.torsion.size()));
        for (size_t i = 0; i < val.torsion.size(); ++i)
            rel.at(static_cast<int>(i), static_cast<int>(i)) = val.torsion[i];
        return {n, rel};
    }
    IntMatrix action(const PointedSetTuple&, const PointedSetTuple&,
                     const std::vector<int>&) const override {
        return IntMatrix::identity(val.rank + static_cast<int>(val.torsion.size()));
    }
};

struct AdditiveFreeRule final : FunctorRule {
    Variance variance() const override { return Variance::Covariant; }
    std::string name() const override { return "additive-free"; }
    std::pair<int, IntMatrix> value(const PointedSetTuple& x) const override {
        return {x.total_parts(), IntMatrix(x.total_parts(), 0)};
    }
    IntMatrix action(const PointedSetTuple& src, const PointedSetTuple& dst,
                     const std::vector<int>& slot_map) const override {
        IntMatrix m(dst.total_parts(), src.total_parts());
        for (size_t s = 0; s < slot_map.size(); ++s)
            if (slot_map[s] >= 0) m.at(slot_map[s], static_cast<int>(s)) = 1;
        return m;
    }
};

struct H1StabilizerRule final : FunctorRule {
    GroupFamily fam;
    std::vector<std::vector<mpz_class>> divisors;  // per factor: G_e^ab torsion

    explicit H1StabilizerRule(GroupFamily f) : fam(std::move(f)) {
        for (int e = 0; e < fam.size(); ++e) divisors.push_back(fam.factor(e).abelianization().torsion);
    }
    Variance variance() const override { return Variance::Contravariant; }
    std::string name() const override { return fmt::format("H1<{}>", fam.to_string()); }

    // generators: per slot (coordinate e) the torsion generators of G_e^ab
    std::vector<int> gen_offsets(const PointedSetTuple& x) const {
        std::vector<int> off;
        int acc = 0;
        for (int s = 0; s < x.total_parts(); ++s) {
            off.push_back(acc);
            acc += static_cast<int>(divisors[x.coord_part_of_slot(s).first].size());
        }
        off.push_back(acc);
        return off;
    }
    std::pair<int, IntMatrix> value(const PointedSetTuple& x) const override {
        if (x.coords() != fam.size())
            throw StructuralError("h1_stabilizer_rule: coordinate count mismatch");
        std::vector<int> off = gen_offsets(x);
        const int n = off.back();
        IntMatrix rel(n, n);
        for (int s = 0; s < x.total_parts(); ++s) {
            const auto& div = divisors[x.coord_part_of_slot(s).first];
            for (size_t k = 0; k < div.size(); ++k)
                rel.at(off[s] + static_cast<int>(k), off[s] + static_cast<int>(k)) = div[k];
        }
        return {n, rel};
    }
    IntMatrix action(const PointedSetTuple& src, const PointedSetTuple& dst,
                     const std::vector<int>& slot_map) const override {
        // T(f): T(dst) -> T(src): the coordinate at slot s reads the value at
        // f(s), or 1 when undefined
        std::vector<int> off_src = gen_offsets(src), off_dst = gen_offsets(dst);
        IntMatrix m(off_src.back(), off_dst.back());
        for (size_t s = 0; s < slot_map.size(); ++s) {
            if (slot_map[s] < 0) continue;
            const auto& div = divisors[src.coord_part_of_slot(static_cast<int>(s)).first];
            for (size_t k = 0; k < div.size(); ++k)
                m.at(off_src[s] + static_cast<int>(k),
                     off_dst[slot_map[s]] + static_cast<int>(k)) = 1;
        }
        return m;
    }
};

// basis of Z[ens(y, x)]: everywhere-defined coordinate-preserving part maps
struct TotalMapBasis {
    std::vector<std::vector<int>> maps;  // each: per y-slot an x-slot
};

TotalMapBasis total_maps(const PointedSetTuple& y, const PointedSetTuple& x) {
    TotalMapBasis b;
    if (y.coords() != x.coords()) throw StructuralError("total_maps: coordinate mismatch");
    std::vector<std::pair<int, int>> radix;  // per y-slot: (x-slot base, count)
    for (int e = 0; e < y.coords(); ++e)
        for (int p = 0; p < y.parts_at(e); ++p) {
            if (x.parts_at(e) == 0) return b;  // no maps at all
            radix.push_back({x.slot_of(e, 0), x.parts_at(e)});
        }
    std::vector<int> pick(radix.size(), 0);
    for (;;) {
        std::vector<int> m(radix.size());
        for (size_t i = 0; i < radix.size(); ++i) m[i] = radix[i].first + pick[i];
        b.maps.push_back(std::move(m));
        size_t i = 0;
        while (i < radix.size() && ++pick[i] == radix[i].second) pick[i++] = 0;
        if (i == radix.size()) break;
    }
    return b;
}

struct RepresentableRule final : FunctorRule {
    PointedSetTuple y;
    explicit RepresentableRule(PointedSetTuple y_) : y(std::move(y_)) {}
    Variance variance() const override { return Variance::Covariant; }
    std::string name() const override { return fmt::format("Z[ens({},-)]", y.shape_key()); }
    std::pair<int, IntMatrix> value(const PointedSetTuple& x) const override {
        TotalMapBasis b = total_maps(y, x);
        return {static_cast<int>(b.maps.size()), IntMatrix(static_cast<int>(b.maps.size()), 0)};
    }
    IntMatrix action(const PointedSetTuple& src, const PointedSetTuple& dst,
                     const std::vector<int>& slot_map) const override {
        TotalMapBasis bs = total_maps(y, src), bd = total_maps(y, dst);
        std::map<std::vector<int>, int> lookup;
        for (size_t i = 0; i < bd.maps.size(); ++i) lookup[bd.maps[i]] = static_cast<int>(i);
        IntMatrix m(static_cast<int>(bd.maps.size()), static_cast<int>(bs.maps.size()));
        for (size_t c = 0; c < bs.maps.size(); ++c) {
            std::vector<int> composite(bs.maps[c].size());
            bool total = true;
            for (size_t t = 0; t < composite.size(); ++t) {
                int v = slot_map[bs.maps[c][t]];
                if (v < 0) {
                    total = false;
                    break;
                }
                composite[t] = v;
            }
            if (total) m.at(lookup.at(composite), static_cast<int>(c)) = 1;
        }
        return m;
    }
};

// basis of Z[Hom(x, y)]: all coordinate-preserving partial part maps; index 0
// is reserved for the everywhere-undefined morphism
std::vector<std::vector<int>> partial_maps(const PointedSetTuple& src, const PointedSetTuple& dst) {
    std::vector<std::pair<int, int>> radix;  // per src slot: (dst base, count+1)
    for (int e = 0; e < src.coords(); ++e)
        for (int p = 0; p < src.parts_at(e); ++p)
            radix.push_back({dst.parts_at(e) ? dst.slot_of(e, 0) : 0, dst.parts_at(e) + 1});
    std::vector<std::vector<int>> out;
    std::vector<int> pick(radix.size(), 0);
    for (;;) {
        std::vector<int> m(radix.size());
        for (size_t i = 0; i < radix.size(); ++i) m[i] = pick[i] == 0 ? -1 : radix[i].first + pick[i] - 1;
        out.push_back(std::move(m));
        size_t i = 0;
        while (i < radix.size() && ++pick[i] == radix[i].second) pick[i++] = 0;
        if (i == radix.size()) break;
    }
    return out;
}

struct PresheafSumRule final : FunctorRule {
    std::vector<PresheafTerm> terms;
    explicit PresheafSumRule(std::vector<PresheafTerm> t) : terms(std::move(t)) {}
    Variance variance() const override { return Variance::Contravariant; }
    std::string name() const override {
        std::string s = "presheaf[";
        for (size_t i = 0; i < terms.size(); ++i)
            s += fmt::format("{}{}{}{}", i ? "+" : "", terms[i].y.shape_key(),
                             terms[i].reduced ? "~" : "",
                             terms[i].torsion ? fmt::format("/{}", terms[i].torsion) : "");
        return s + "]";
    }

    // per term: basis = partial maps x -> y, minus the zero morphism when
    // reduced
    std::vector<std::vector<std::vector<int>>> bases(const PointedSetTuple& x) const {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& term : terms) {
            auto maps = partial_maps(x, term.y);
            if (term.reduced) {
                std::erase_if(maps, [](const std::vector<int>& m) {
                    return std::all_of(m.begin(), m.end(), [](int v) { return v < 0; });
                });
            }
            out.push_back(std::move(maps));
        }
        return out;
    }

    std::pair<int, IntMatrix> value(const PointedSetTuple& x) const override {
        auto bs = bases(x);
        int n = 0;
        std::vector<std::pair<int, mpz_class>> torsion_cols;
        for (size_t t = 0; t < bs.size(); ++t) {
            if (terms[t].torsion)
                for (size_t i = 0; i < bs[t].size(); ++i)
                    torsion_cols.push_back({n + static_cast<int>(i), mpz_class(terms[t].torsion)});
            n += static_cast<int>(bs[t].size());
        }
        IntMatrix rel(n, static_cast<int>(torsion_cols.size()));
        for (size_t c = 0; c < torsion_cols.size(); ++c)
            rel.at(torsion_cols[c].first, static_cast<int>(c)) = torsion_cols[c].second;
        return {n, rel};
    }

    IntMatrix action(const PointedSetTuple& src, const PointedSetTuple& dst,
                     const std::vector<int>& slot_map) const override {
        // precomposition: a basis map v: dst -> y pulls back to v o f: src -> y
        auto bsrc = bases(src), bdst = bases(dst);
        int rows = 0, cols = 0;
        for (const auto& b : bsrc) rows += static_cast<int>(b.size());
        for (const auto& b : bdst) cols += static_cast<int>(b.size());
        IntMatrix m(rows, cols);
        int row_off = 0, col_off = 0;
        for (size_t t = 0; t < terms.size(); ++t) {
            std::map<std::vector<int>, int> lookup;
            for (size_t i = 0; i < bsrc[t].size(); ++i) lookup[bsrc[t][i]] = static_cast<int>(i);
            for (size_t c = 0; c < bdst[t].size(); ++c) {
                const auto& v = bdst[t][c];
                std::vector<int> pulled(slot_map.size(), -1);
                for (size_t s = 0; s < slot_map.size(); ++s)
                    if (slot_map[s] >= 0) pulled[s] = v[slot_map[s]];
                auto it = lookup.find(pulled);  // absent = the zero morphism of a reduced term
                if (it != lookup.end())
                    m.at(row_off + it->second, col_off + static_cast<int>(c)) = 1;
            }
            row_off += static_cast<int>(bsrc[t].size());
            col_off += static_cast<int>(bdst[t].size());
        }
        return m;
    }
};

}  // namespace

std::unique_ptr<FunctorRule> constant_rule(const FgAbGroup& value, Variance v) {
    return std::make_unique<ConstantRule>(value, v);
}

std::unique_ptr<FunctorRule> additive_free_rule() { return std::make_unique<AdditiveFreeRule>(); }

std::unique_ptr<FunctorRule> h1_stabilizer_rule(const GroupFamily& fam) {
    return std::make_unique<H1StabilizerRule>(fam);
}

std::unique_ptr<FunctorRule> representable_rule(const PointedSetTuple& y) {
    return std::make_unique<RepresentableRule>(y);
}

std::unique_ptr<FunctorRule> presheaf_sum_rule(std::vector<PresheafTerm> terms) {
    return std::make_unique<PresheafSumRule>(std::move(terms));
}

std::unique_ptr<FunctorRule> random_presheaf_rule(int coords, int max_total_parts,
                                                  std::mt19937_64& rng) {
    auto draw = [&](int n) { return static_cast<int>(rng() % n); };
    std::vector<PresheafTerm> terms;
    const int nterms = 1 + draw(3);
    static const long torsions[] = {0, 0, 2, 3, 4, 6};
    for (int t = 0; t < nterms; ++t) {
        PresheafTerm term;
        int budget = 1 + draw(max_total_parts);
        std::vector<int> counts(coords, 0);
        for (int b = 0; b < budget; ++b) counts[draw(coords)] += 1;
        term.y = PointedSetTuple::shape(counts);
        term.reduced = draw(4) != 0;  // mostly reduced
        term.torsion = torsions[draw(6)];
        terms.push_back(std::move(term));
    }
    return presheaf_sum_rule(std::move(terms));
}

std::vector<std::vector<int>> all_partial_maps(const PointedSetTuple& src,
                                               const PointedSetTuple& dst) {
    return partial_maps(src, dst);
}

FgAbGroup tensor_over_diagram(const TabulatedFunctor& t, const FunctorRule& covariant_rule) {
    if (t.variance() != Variance::Contravariant || covariant_rule.variance() != Variance::Covariant)
        throw StructuralError("tensor_over_diagram: need a contravariant module and covariant rule");
    // generator block per object: T(X)-gens x R(X)-gens
    std::vector<int> rdim(t.object_count()), offset(t.object_count() + 1, 0);
    std::vector<IntMatrix> rrel(t.object_count());
    for (int id = 0; id < t.object_count(); ++id) {
        auto [n, rel] = covariant_rule.value(t.object(id).shape);
        rdim[id] = n;
        rrel[id] = std::move(rel);
        offset[id + 1] = offset[id] + t.object(id).ngens * n;
    }
    auto pos = [&](int obj, int tg, int rg) { return offset[obj] + tg * rdim[obj] + rg; };

    std::vector<std::map<int, mpz_class>> relcols;
    auto add_col = [&](std::map<int, mpz_class> col) { relcols.push_back(std::move(col)); };

    // value relations tensor identity (both sides)
    for (int id = 0; id < t.object_count(); ++id) {
        const IntMatrix& tr = t.object(id).relations;
        for (int c = 0; c < tr.cols(); ++c)
            for (int rg = 0; rg < rdim[id]; ++rg) {
                std::map<int, mpz_class> col;
                for (int g = 0; g < tr.rows(); ++g)
                    if (tr.at(g, c) != 0) col[pos(id, g, rg)] = tr.at(g, c);
                add_col(std::move(col));
            }
        for (int c = 0; c < rrel[id].cols(); ++c)
            for (int tg = 0; tg < t.object(id).ngens; ++tg) {
                std::map<int, mpz_class> col;
                for (int g = 0; g < rrel[id].rows(); ++g)
                    if (rrel[id].at(g, c) != 0) col[pos(id, tg, g)] = rrel[id].at(g, c);
                add_col(std::move(col));
            }
    }

    // bimodule relations: for f: X -> X', t' in T(X'), u in R(X):
    //   T(f)(t') (x) u  =  t' (x) R(f)(u)
    for (const SlotMorphism& f : t.stored_morphisms()) {
        const IntMatrix& tact = t.action(f);
        IntMatrix ract = covariant_rule.action(t.object(f.src).shape, t.object(f.dst).shape, f.map);
        // tact: gens(src) x gens(dst) = T(X') -> T(X); ract: R-gens(dst) x R-gens(src)
        for (int tg = 0; tg < t.object(f.dst).ngens; ++tg)
            for (int rg = 0; rg < rdim[f.src]; ++rg) {
                std::map<int, mpz_class> col;
                for (int g = 0; g < t.object(f.src).ngens; ++g)
                    if (tact.at(g, tg) != 0) col[pos(f.src, g, rg)] += tact.at(g, tg);
                for (int g = 0; g < rdim[f.dst]; ++g)
                    if (ract.at(g, rg) != 0) col[pos(f.dst, tg, g)] -= ract.at(g, rg);
                std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
                if (!col.empty()) add_col(std::move(col));
            }
    }

    SparseIntMatrix m(offset.back(), static_cast<int>(relcols.size()));
    for (size_t c = 0; c < relcols.size(); ++c)
        for (const auto& [r, v] : relcols[c]) m.set(r, static_cast<int>(c), v);
    RankDivisors rd = sparse_rank_divisors(m);
    std::vector<mpz_class> torsion;
    for (const auto& d : rd.divisors)
        if (d != 1) torsion.push_back(d);
    return normalize_cyclics(offset.back() - rd.rank, torsion);
}

}  // namespace autfp
