#include "autfp/fr.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

#include <fmt/format.h>

namespace autfp {

int FRPresentation::gen_id(int i, int j, int g) const {
    if (g == 0) return -1;
    for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k].i == i && gens[k].j == j && gens[k].g == g) return static_cast<int>(k);
    throw StructuralError(fmt::format("FRPresentation: no generator a[{},{},{}]", i, j, g));
}

SymmetricAutomorphism FRPresentation::gen_automorphism(int id) const {
    const Gen& g = gens.at(id);
    return SymmetricAutomorphism::whitehead_generator(g.i, g.j, g.g, fam);
}

SymmetricAutomorphism FRPresentation::evaluate(const std::vector<int>& word) const {
    SymmetricAutomorphism phi = SymmetricAutomorphism::identity(fam);
    for (int s : word) {
        SymmetricAutomorphism gen = gen_automorphism(std::abs(s) - 1);
        phi = phi.then(s > 0 ? gen : gen.inverse(), fam);
    }
    return phi;
}

namespace {

// append the signed word for a generator id (skipping identity coefficients)
void push_gen(std::vector<int>& word, int id, bool inverse = false) {
    if (id < 0) return;
    word.push_back(inverse ? -(id + 1) : id + 1);
}

}  // namespace

FRPresentation fr_presentation(const GroupFamily& fam) {
    FRPresentation out;
    out.fam = fam;
    const int n = fam.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int g = 1; g < fam.factor(i).order(); ++g) {
                out.gens.push_back({i, j, g});
                out.pres.add_generator(fmt::format("a[{},{},{}]", i, j, g));
            }
        }
    auto emit = [&](std::vector<int> word, const std::string& what) {
        if (!out.evaluate(word).is_identity_action(fam))
            throw StructuralError(
                fmt::format("fr_presentation: relator {} fails the automorphism check", what));
        out.pres.add_relator(std::move(word));
    };
    for (int i = 0; i < n; ++i) {
        const FiniteGroup& gi = fam.factor(i);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            // a[i,j,g] then a[i,j,h] conjugates by g*h
            for (int g = 1; g < gi.order(); ++g)
                for (int h = 1; h < gi.order(); ++h) {
                    std::vector<int> w;
                    push_gen(w, out.gen_id(i, j, g));
                    push_gen(w, out.gen_id(i, j, h));
                    push_gen(w, out.gen_id(i, j, gi.mul(g, h)), true);
                    emit(std::move(w), fmt::format("product a[{},{},{}]*a[{},{},{}]", i, j, g, i, j, h));
                }
            // commuting targets: [a[i,j,g], a[i,j',g']] for j' distinct
            for (int jp = 0; jp < n; ++jp) {
                if (jp == i || jp == j) continue;
                for (int g = 1; g < gi.order(); ++g)
                    for (int h = 1; h < gi.order(); ++h) {
                        std::vector<int> w;
                        push_gen(w, out.gen_id(i, j, g));
                        push_gen(w, out.gen_id(i, jp, h));
                        push_gen(w, out.gen_id(i, j, g), true);
                        push_gen(w, out.gen_id(i, jp, h), true);
                        emit(std::move(w), fmt::format("commutator a[{},{},{}] vs a[{},{},{}]",
                                                       i, j, g, i, jp, h));
                    }
            }
            // a[i,j,g] commutes with a[i',j,g'] a[i',i,g'] for i' distinct
            for (int ip = 0; ip < n; ++ip) {
                if (ip == i || ip == j) continue;
                const FiniteGroup& gip = fam.factor(ip);
                for (int g = 1; g < gi.order(); ++g)
                    for (int h = 1; h < gip.order(); ++h) {
                        std::vector<int> w;
                        push_gen(w, out.gen_id(i, j, g));
                        push_gen(w, out.gen_id(ip, j, h));
                        push_gen(w, out.gen_id(ip, i, h));
                        push_gen(w, out.gen_id(i, j, g), true);
                        push_gen(w, out.gen_id(ip, i, h), true);
                        push_gen(w, out.gen_id(ip, j, h), true);
                        emit(std::move(w), fmt::format("mixed a[{},{},{}] vs a[{},*,{}]",
                                                       i, j, g, ip, h));
                    }
            }
        }
    }
    return out;
}

FgAbGroup h1_fr_direct_formula(const GroupFamily& fam) {
    FgAbGroup h;
    for (int i = 0; i < fam.size(); ++i) {
        FgAbGroup ab = fam.factor(i).abelianization();
        for (int j = 0; j < fam.size(); ++j)
            if (j != i) h = h.direct_sum(ab);
    }
    return h;
}

FgAbGroup h1_fr_formula(const GroupFamily& fam, int max_labels) {
    if (fam.size() == 0) return FgAbGroup::zero();
    std::vector<TreeJ> trees = enumerate_trees(fam.size(), max_labels);
    std::vector<PointedSetTuple> shapes;
    std::set<std::string> seen;
    std::vector<PointedSetTuple> fancy;
    for (const TreeJ& a : trees) {
        if (!a.in_fancy_f()) continue;
        PointedSetTuple p = fe_object(a);
        fancy.push_back(p);
        if (seen.insert(p.shape_key()).second) shapes.push_back(p);
    }
    auto rule = h1_stabilizer_rule(fam);
    TabulatedFunctor t = materialize(*rule, shapes);
    FgAbGroup total;
    for (const PointedSetTuple& p : fancy)
        total = total.direct_sum(full_cross_effect(t, t.object_id(p)).group);
    return total;
}

namespace {

struct VariantCounter {
    RelationVariantReport rep;
    const GroupFamily& fam;

    void check(const SymmetricAutomorphism& lhs, const SymmetricAutomorphism& rhs,
               const std::string& instance) {
        ++rep.instances;
        if (!lhs.same_action(rhs, fam)) {
            ++rep.violations;
            if (rep.first_violation.empty()) rep.first_violation = instance;
        }
    }
};

}  // namespace

std::vector<RelationVariantReport> relations_report(const GroupFamily& fam) {
    const int n = fam.size();
    auto alpha = [&](int i, int j, int g) {
        return SymmetricAutomorphism::whitehead_generator(i, j, g, fam);
    };
    // under classical composition (f o g = f after g) the printed first line
    // reads, diagrammatically, a^g;a^h = a^{gh}; the reversed product is the
    // other candidate reading
    VariantCounter r1{{"r1-printed (a^g;a^h = a^{gh})"}, fam};
    VariantCounter r1s{{"r1-reversed (a^g;a^h = a^{hg})"}, fam};
    VariantCounter r2p{{"r2-printed (superscripts crossed)"}, fam};
    VariantCounter r2c{{"r2-corrected (plain commutation)"}, fam};
    VariantCounter r3c{{"r3-corrected (side condition on i,i',j)"}, fam};
    for (int i = 0; i < n; ++i) {
        const FiniteGroup& gi = fam.factor(i);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int g = 1; g < gi.order(); ++g)
                for (int h = 1; h < gi.order(); ++h) {
                    auto inst = fmt::format("i={},j={},g={},g'={}", i, j, g, h);
                    auto lhs = alpha(i, j, g).then(alpha(i, j, h), fam);
                    r1.check(lhs, alpha(i, j, gi.mul(g, h)), inst);
                    r1s.check(lhs, alpha(i, j, gi.mul(h, g)), inst);
                }
            for (int jp = 0; jp < n; ++jp) {
                if (jp == i || jp == j) continue;
                for (int g = 1; g < gi.order(); ++g)
                    for (int h = 1; h < gi.order(); ++h) {
                        auto inst = fmt::format("i={},j={},j'={},g={},g'={}", i, j, jp, g, h);
                        r2p.check(alpha(i, j, g).then(alpha(i, jp, h), fam),
                                  alpha(i, jp, g).then(alpha(i, j, h), fam), inst);
                        r2c.check(alpha(i, j, g).then(alpha(i, jp, h), fam),
                                  alpha(i, jp, h).then(alpha(i, j, g), fam), inst);
                    }
                // r3 with i' := jp playing the second operating factor
                const FiniteGroup& gp = fam.factor(jp);
                for (int g = 1; g < gi.order(); ++g)
                    for (int h = 1; h < gp.order(); ++h) {
                        auto inst = fmt::format("i={},i'={},j={},g={},g'={}", i, jp, j, g, h);
                        auto prod = alpha(jp, j, h).then(alpha(jp, i, h), fam);
                        r3c.check(alpha(i, j, g).then(prod, fam), prod.then(alpha(i, j, g), fam),
                                  inst);
                    }
            }
        }
    }
    return {r1.rep, r1s.rep, r2p.rep, r2c.rep, r3c.rep};
}

StabilizerModel::StabilizerModel(const TreeJ& a, const GroupFamily& f)
    : tree(a), fam(f), parts(fe_object(a)) {
    for (int e = 0; e < parts.coords(); ++e)
        for (int p = 0; p < parts.parts_at(e); ++p) {
            slot_label.push_back(e);
            size *= fam.factor(e).order();
        }
}

SymmetricAutomorphism StabilizerModel::image(const std::vector<int>& element) const {
    if (element.size() != slot_label.size())
        throw StructuralError("StabilizerModel: element has the wrong arity");
    SymmetricAutomorphism phi = SymmetricAutomorphism::identity(fam);
    int slot = 0;
    for (int e = 0; e < parts.coords(); ++e)
        for (int p = 0; p < parts.parts_at(e); ++p, ++slot) {
            if (element[slot] == 0) continue;
            for (int lbl : parts.parts[e][p])
                phi = phi.then(
                    SymmetricAutomorphism::whitehead_generator(e, lbl, element[slot], fam), fam);
        }
    return phi;
}

std::vector<std::vector<int>> StabilizerModel::elements() const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(slot_label.size(), 0);
    for (;;) {
        out.push_back(cur);
        size_t k = 0;
        while (k < cur.size() && ++cur[k] == fam.factor(slot_label[k]).order()) cur[k++] = 0;
        if (k == cur.size()) break;
    }
    return out;
}

StabilizerCheck verify_stabilizer_map(const TreeJ& a, const GroupFamily& fam, long pair_bound) {
    StabilizerModel model(a, fam);
    StabilizerCheck check;
    check.domain_size = static_cast<int>(model.size);
    const auto elts = model.elements();

    std::vector<SymmetricAutomorphism> images;
    std::map<std::string, int> sig_to_elt;
    images.reserve(elts.size());
    for (size_t k = 0; k < elts.size(); ++k) {
        images.push_back(model.image(elts[k]));
        std::string sig = images.back().action_signature(fam);
        auto [it, fresh] = sig_to_elt.emplace(sig, static_cast<int>(k));
        if (!fresh) {
            check.injective = false;
            check.witnesses.push_back(fmt::format("collision of elements {} and {}", it->second, k));
        }
    }

    // multiplicativity against the slotwise product
    check.sampled = static_cast<long>(elts.size()) * static_cast<long>(elts.size()) > pair_bound;
    size_t step = check.sampled ? (elts.size() * elts.size() + pair_bound - 1) / pair_bound : 1;
    size_t pair_idx = 0;
    for (size_t x = 0; x < elts.size(); ++x)
        for (size_t y = 0; y < elts.size(); ++y, ++pair_idx) {
            if (step > 1 && pair_idx % step != 0) continue;
            std::vector<int> prod(elts[x].size());
            for (size_t s = 0; s < prod.size(); ++s)
                prod[s] = fam.factor(model.slot_label[s]).mul(elts[x][s], elts[y][s]);
            if (!images[x].then(images[y], fam).same_action(model.image(prod), fam)) {
                check.multiplicative = false;
                check.witnesses.push_back(fmt::format("pair ({},{})", x, y));
            }
        }

    // the image must be exactly the subgroup generated by the supported
    // Whitehead automorphisms
    std::set<std::string> image_sigs;
    for (const auto& im : images) image_sigs.insert(im.action_signature(fam));
    std::vector<SymmetricAutomorphism> gens;
    for (int ell = 0; ell < fam.size(); ++ell) {
        // enumerate Whitehead data at operating factor ell
        std::vector<int> coeff(fam.size(), 0);
        const long total = [&] {
            long t = 1;
            for (int e = 0; e < fam.size(); ++e)
                if (e != ell) t *= fam.factor(ell).order();
            return t;
        }();
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (int e = 0; e < fam.size(); ++e) {
                if (e == ell) {
                    coeff[e] = 0;
                    continue;
                }
                coeff[e] = static_cast<int>(c % fam.factor(ell).order());
                c /= fam.factor(ell).order();
            }
            WhiteheadData data(ell, coeff, fam);
            if (is_supported_by(data, a, fam)) gens.push_back(data.to_automorphism(fam));
        }
    }
    std::set<std::string> closure;
    std::vector<SymmetricAutomorphism> frontier = {SymmetricAutomorphism::identity(fam)};
    closure.insert(frontier[0].action_signature(fam));
    while (!frontier.empty()) {
        std::vector<SymmetricAutomorphism> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                SymmetricAutomorphism y = x.then(g, fam);
                if (closure.insert(y.action_signature(fam)).second) next.push_back(std::move(y));
                if (closure.size() > image_sigs.size() * 4 + 64)
                    throw BoundExceeded("verify_stabilizer_map: closure runaway");
            }
        frontier = std::move(next);
    }
    if (closure != image_sigs) {
        check.image_exact = false;
        check.witnesses.push_back(fmt::format("closure has {} elements, image {}", closure.size(),
                                              image_sigs.size()));
    }
    return check;
}

TreeDiagram build_tree_diagram(const TreePoset& poset) {
    TreeDiagram d;
    d.poset = &poset;
    std::map<std::string, int> shape_pos;
    std::vector<PointedSetTuple> tuples;
    d.object_of_tree.resize(poset.size());
    for (int i = 0; i < poset.size(); ++i) {
        PointedSetTuple p = fe_object(poset.element(i));
        auto [it, fresh] = shape_pos.emplace(p.shape_key(), static_cast<int>(d.shapes.size()));
        if (fresh) d.shapes.push_back(p);
        d.object_of_tree[i] = it->second;
        tuples.push_back(std::move(p));
    }
    for (int i = 0; i < poset.size(); ++i)
        for (int j = 0; j < poset.size(); ++j) {
            if (!poset.less(i, j)) continue;
            GammaEMorphism f = fe_morphism(poset.element(i), poset.element(j));
            d.morphisms.push_back({tuples[j], {tuples[i], f.slot_map()}});
        }
    return d;
}

TabulatedFunctor materialize_on_trees(const FunctorRule& rule, const TreeDiagram& diagram) {
    return materialize(rule, diagram.shapes, diagram.morphisms);
}

DecPiraReport dec_pira_check(const TreePoset& poset, const TreeDiagram& diagram,
                             const TabulatedFunctor& t, int nmax) {
    DecPiraReport rep;
    rep.statement = "H_0(J_E; T o F_E) = sum of full cross effects over the bivalent subfamily; "
                    "H_n = 0 for 0 < n <= nmax";
    rep.instance = fmt::format("|E|={}, T={}, nmax={}", poset.element(0).label_count(), t.name(),
                               nmax);
    t.validate(500);

    std::vector<int> obj_of_tree(poset.size());
    for (int i = 0; i < poset.size(); ++i)
        obj_of_tree[i] = t.object_id(diagram.shapes[diagram.object_of_tree[i]]);

    PosetView view{poset.size(), [&poset](int i, int j) { return poset.less(i, j); }};
    PosetCoefficients coeff{
        [&](int i) { return t.object(obj_of_tree[i]).ngens; },
        [&](int i) { return t.object(obj_of_tree[i]).relations; },
        [&](int i, int j) {
            GammaEMorphism f = fe_morphism(poset.element(i), poset.element(j));
            SlotMorphism sm{obj_of_tree[j], obj_of_tree[i], f.slot_map()};
            return t.action(sm);
        },
    };
    std::vector<FgAbGroup> h = poset_homology(view, coeff, nmax);

    FgAbGroup rhs;
    for (int i = 0; i < poset.size(); ++i) {
        if (!poset.element(i).in_fancy_f()) continue;
        rhs = rhs.direct_sum(full_cross_effect(t, obj_of_tree[i]).group);
    }
    rep.lhs = h[0].to_string();
    rep.rhs = rhs.to_string();
    rep.pass = h[0] == rhs;
    if (!rep.pass)
        rep.witnesses.push_back(fmt::format("H_0 = {} but cross-effect sum = {}", rep.lhs, rep.rhs));
    for (int n = 1; n <= nmax; ++n) {
        rep.higher.push_back(h[n].to_string());
        if (!h[n].is_zero()) {
            rep.pass = false;
            rep.witnesses.push_back(fmt::format("H_{} = {} (expected 0)", n, h[n].to_string()));
        }
    }
    return rep;
}

namespace {

struct AutData {
    std::vector<std::vector<std::vector<int>>> autos;  // per label: automorphism tables
    std::vector<std::vector<int>> classes;             // table classes, ordered
};

AutData aut_data(const GroupFamily& fam, int aut_bound) {
    AutData d;
    for (int e = 0; e < fam.size(); ++e) d.autos.push_back(automorphism_group(fam.factor(e), aut_bound));
    d.classes = fam.table_classes();
    return d;
}

int auto_index(const std::vector<std::vector<int>>& autos, const std::vector<int>& table) {
    for (size_t k = 0; k < autos.size(); ++k)
        if (autos[k] == table) return static_cast<int>(k);
    throw StructuralError("sigma_aut_presentation: automorphism not in the computed list");
}

}  // namespace

SigmaAutPresentation sigma_aut_presentation(const GroupFamily& fam, int aut_bound) {
    SigmaAutPresentation out;
    out.fam = fam;
    FRPresentation fr = fr_presentation(fam);
    out.pres = fr.pres;
    const AutData aut = aut_data(fam, aut_bound);

    // generator bookkeeping beyond the FR block
    std::map<std::pair<int, int>, int> auto_gen;    // (label, auto index>0) -> gen id
    std::map<std::pair<int, int>, int> transp_gen;  // (class, position) -> gen id
    for (int e = 0; e < fam.size(); ++e)
        for (size_t k = 1; k < aut.autos[e].size(); ++k)
            auto_gen[{e, static_cast<int>(k)}] =
                out.pres.add_generator(fmt::format("t[{},{}]", e, k));
    for (size_t c = 0; c < aut.classes.size(); ++c)
        for (size_t p = 0; p + 1 < aut.classes[c].size(); ++p)
            transp_gen[{static_cast<int>(c), static_cast<int>(p)}] =
                out.pres.add_generator(fmt::format("s[{},{}]", c, p));

    auto auto_word = [&](int e, int k, bool inv = false) {
        std::vector<int> w;
        if (k != 0) w.push_back((inv ? -1 : 1) * (auto_gen.at({e, k}) + 1));
        return w;
    };

    // the actual automorphisms behind the generators, for conjugation
    auto block_of_auto = [&](int e, int k) {
        std::vector<int> perm(fam.size());
        std::vector<std::vector<int>> iso(fam.size());
        for (int x = 0; x < fam.size(); ++x) {
            perm[x] = x;
            iso[x].resize(fam.factor(x).order());
            for (int g = 0; g < fam.factor(x).order(); ++g) iso[x][g] = g;
        }
        iso[e] = aut.autos[e][k];
        return SymmetricAutomorphism::block(std::move(perm), std::move(iso), fam);
    };
    auto block_of_transp = [&](int c, int p) {
        const int a = aut.classes[c][p], b = aut.classes[c][p + 1];
        std::vector<int> perm(fam.size());
        std::vector<std::vector<int>> iso(fam.size());
        for (int x = 0; x < fam.size(); ++x) {
            perm[x] = x;
            iso[x].resize(fam.factor(x).order());
            for (int g = 0; g < fam.factor(x).order(); ++g) iso[x][g] = g;
        }
        perm[a] = b;
        perm[b] = a;
        return SymmetricAutomorphism::block(std::move(perm), std::move(iso), fam);
    };

    // identify a composite automorphism as a single FR generator
    auto find_fr_gen = [&](const SymmetricAutomorphism& phi) {
        for (size_t k = 0; k < fr.gens.size(); ++k)
            if (phi.same_action(fr.gen_automorphism(static_cast<int>(k)), fam))
                return static_cast<int>(k);
        throw StructuralError(
            "sigma_aut_presentation: conjugate of a generator is not a single generator");
    };

    // relations of the factor automorphism groups (multiplication tables)
    for (int e = 0; e < fam.size(); ++e) {
        const auto& list = aut.autos[e];
        for (size_t k1 = 0; k1 < list.size(); ++k1)
            for (size_t k2 = 0; k2 < list.size(); ++k2) {
                // diagrammatic product: apply k1 then k2 = table k2 o k1
                std::vector<int> comp(list[k1].size());
                for (size_t g = 0; g < comp.size(); ++g) comp[g] = list[k2][list[k1][g]];
                int k3 = auto_index(list, comp);
                if (k1 == 0 || k2 == 0) continue;  // trivially satisfied
                std::vector<int> w = auto_word(e, static_cast<int>(k1));
                for (int s : auto_word(e, static_cast<int>(k2))) w.push_back(s);
                for (int s : auto_word(e, k3, true)) w.push_back(s);
                out.pres.add_relator(std::move(w));
            }
    }
    // factor automorphisms at distinct labels commute
    for (int e = 0; e < fam.size(); ++e)
        for (int f = e + 1; f < fam.size(); ++f)
            for (size_t k1 = 1; k1 < aut.autos[e].size(); ++k1)
                for (size_t k2 = 1; k2 < aut.autos[f].size(); ++k2) {
                    std::vector<int> w;
                    w.push_back(auto_gen.at({e, static_cast<int>(k1)}) + 1);
                    w.push_back(auto_gen.at({f, static_cast<int>(k2)}) + 1);
                    w.push_back(-(auto_gen.at({e, static_cast<int>(k1)}) + 1));
                    w.push_back(-(auto_gen.at({f, static_cast<int>(k2)}) + 1));
                    out.pres.add_relator(std::move(w));
                }
    // Coxeter relations per class
    for (size_t c = 0; c < aut.classes.size(); ++c) {
        const int m = static_cast<int>(aut.classes[c].size());
        for (int p = 0; p + 1 < m; ++p) {
            const int s = transp_gen.at({static_cast<int>(c), p}) + 1;
            out.pres.add_relator({s, s});
            if (p + 2 < m) {
                const int s2 = transp_gen.at({static_cast<int>(c), p + 1}) + 1;
                out.pres.add_relator({s, s2, s, s2, s, s2});
            }
            for (int q = p + 2; q + 1 < m; ++q) {
                const int s2 = transp_gen.at({static_cast<int>(c), q}) + 1;
                out.pres.add_relator({s, s2, -s, -s2});
            }
        }
        // transpositions of distinct classes commute
        for (size_t c2 = c + 1; c2 < aut.classes.size(); ++c2)
            for (size_t p = 0; p + 1 < aut.classes[c].size(); ++p)
                for (size_t q = 0; q + 1 < aut.classes[c2].size(); ++q) {
                    const int s = transp_gen.at({static_cast<int>(c), static_cast<int>(p)}) + 1;
                    const int s2 = transp_gen.at({static_cast<int>(c2), static_cast<int>(q)}) + 1;
                    out.pres.add_relator({s, s2, -s, -s2});
                }
    }
    // permutations move factor automorphisms between labels
    for (size_t c = 0; c < aut.classes.size(); ++c)
        for (size_t p = 0; p + 1 < aut.classes[c].size(); ++p) {
            const int s = transp_gen.at({static_cast<int>(c), static_cast<int>(p)}) + 1;
            const int a = aut.classes[c][p], b = aut.classes[c][p + 1];
            for (size_t k = 1; k < aut.autos[a].size(); ++k) {
                // s t[a,k] s^-1 = t[b,k] (same tables on a shared factor)
                out.pres.add_relator({s, auto_gen.at({a, static_cast<int>(k)}) + 1, -s,
                                      -(auto_gen.at({b, static_cast<int>(k)}) + 1)});
                out.pres.add_relator({s, auto_gen.at({b, static_cast<int>(k)}) + 1, -s,
                                      -(auto_gen.at({a, static_cast<int>(k)}) + 1)});
            }
            for (int e = 0; e < fam.size(); ++e) {
                if (e == a || e == b) continue;
                for (size_t k = 1; k < aut.autos[e].size(); ++k)
                    out.pres.add_relator({s, auto_gen.at({e, static_cast<int>(k)}) + 1, -s,
                                          -(auto_gen.at({e, static_cast<int>(k)}) + 1)});
            }
        }

    // action of the aut block on the FR generators: conjugate the honest
    // automorphisms and re-express the result as a single generator
    std::vector<std::pair<std::vector<int>, SymmetricAutomorphism>> aut_gens;
    for (const auto& [key, gid] : auto_gen)
        aut_gens.push_back({{gid + 1}, block_of_auto(key.first, key.second)});
    for (const auto& [key, gid] : transp_gen)
        aut_gens.push_back({{gid + 1}, block_of_transp(key.first, key.second)});
    for (const auto& [gword, phi] : aut_gens)
        for (size_t k = 0; k < fr.gens.size(); ++k) {
            SymmetricAutomorphism conj =
                phi.then(fr.gen_automorphism(static_cast<int>(k)), fam).then(phi.inverse(), fam);
            const int image = find_fr_gen(conj);
            std::vector<int> w = gword;
            w.push_back(static_cast<int>(k) + 1);
            for (int s : gword) w.push_back(-s);
            w.push_back(-(image + 1));
            out.pres.add_relator(std::move(w));
        }
    return out;
}

std::vector<int> canonical_inclusion(const GroupFamily& sub, const GroupFamily& sup) {
    auto sub_classes = sub.table_classes();
    auto sup_classes = sup.table_classes();
    std::vector<int> map(sub.size(), -1);
    std::vector<char> used(sup_classes.size(), 0);
    for (const auto& sc : sub_classes) {
        int found = -1;
        for (size_t c = 0; c < sup_classes.size(); ++c) {
            if (used[c]) continue;
            if (sup.factor(sup_classes[c].front()).same_table(sub.factor(sc.front()))) {
                found = static_cast<int>(c);
                break;
            }
        }
        if (found < 0 || sup_classes[found].size() < sc.size())
            throw StructuralError("canonical_inclusion: subfamily does not embed");
        used[found] = 1;
        for (size_t k = 0; k < sc.size(); ++k) map[sc[k]] = sup_classes[found][k];
    }
    return map;
}

namespace {

InclusionH1 inclusion_h1_from(const GroupFamily& sub, const GroupFamily& sup,
                              const SigmaAutPresentation& ps, const SigmaAutPresentation& pg) {
    const std::vector<int> inj = canonical_inclusion(sub, sup);

    // classes are needed to translate transposition names
    auto sub_classes = sub.table_classes();
    auto sup_classes = sup.table_classes();
    auto sup_class_of = [&](int label) {
        for (size_t c = 0; c < sup_classes.size(); ++c)
            for (int x : sup_classes[c])
                if (x == label) return static_cast<int>(c);
        throw StructuralError("sigma_aut_inclusion_h1: label without a class");
    };

    std::vector<std::vector<int>> images(ps.pres.ngens());
    for (int g = 0; g < ps.pres.ngens(); ++g) {
        const std::string& name = ps.pres.generators[g];
        int a, b, cc;
        if (std::sscanf(name.c_str(), "a[%d,%d,%d]", &a, &b, &cc) == 3) {
            int id = pg.pres.generator_id(fmt::format("a[{},{},{}]", inj[a], inj[b], cc));
            if (id < 0) throw StructuralError("sigma_aut_inclusion_h1: missing FR generator");
            images[g] = {id + 1};
        } else if (std::sscanf(name.c_str(), "t[%d,%d]", &a, &b) == 2) {
            int id = pg.pres.generator_id(fmt::format("t[{},{}]", inj[a], b));
            if (id < 0) throw StructuralError("sigma_aut_inclusion_h1: missing factor generator");
            images[g] = {id + 1};
        } else if (std::sscanf(name.c_str(), "s[%d,%d]", &a, &b) == 2) {
            // position b swaps members b, b+1 of sub class a; the canonical
            // inclusion sends them to positions b, b+1 of the matching class
            const int la = sub_classes[a][b], lb = sub_classes[a][b + 1];
            const int cg = sup_class_of(inj[la]);
            int pa = -1, pb = -1;
            for (size_t p = 0; p < sup_classes[cg].size(); ++p) {
                if (sup_classes[cg][p] == inj[la]) pa = static_cast<int>(p);
                if (sup_classes[cg][p] == inj[lb]) pb = static_cast<int>(p);
            }
            if (pb != pa + 1)
                throw StructuralError("sigma_aut_inclusion_h1: inclusion scrambles a class");
            int id = pg.pres.generator_id(fmt::format("s[{},{}]", cg, pa));
            if (id < 0) throw StructuralError("sigma_aut_inclusion_h1: missing transposition");
            images[g] = {id + 1};
        } else {
            throw StructuralError("sigma_aut_inclusion_h1: unrecognized generator name");
        }
    }
    InducedH1 ind = h1_induced_map(ps.pres, pg.pres, images);
    InclusionH1 out;
    out.sub_h1 = ind.src.to_string();
    out.sup_h1 = ind.dst.to_string();
    out.iso = ind.iso;
    out.epi = ind.epi;
    out.mono = ind.mono;
    return out;
}

}  // namespace

InclusionH1 sigma_aut_inclusion_h1(const GroupFamily& sub, const GroupFamily& sup, int aut_bound) {
    return inclusion_h1_from(sub, sup, sigma_aut_presentation(sub, aut_bound),
                             sigma_aut_presentation(sup, aut_bound));
}

StabilityTable stability_h1_table(const FiniteGroup& g, int max_n, int aut_bound) {
    StabilityTable table;
    auto shared = std::make_shared<FiniteGroup>(g);
    auto family_of = [&](int n) {
        std::vector<std::shared_ptr<const FiniteGroup>> fs(n, shared);
        return GroupFamily(std::move(fs));
    };
    // presentations per n are independent jobs
    std::vector<std::future<SigmaAutPresentation>> jobs;
    for (int n = 1; n <= max_n; ++n)
        jobs.push_back(std::async(std::launch::async, [&, n] {
            return sigma_aut_presentation(family_of(n), aut_bound);
        }));
    std::vector<SigmaAutPresentation> pres;
    for (int n = 1; n <= max_n; ++n) {
        try {
            pres.push_back(jobs[n - 1].get());
        } catch (const BoundExceeded& e) {
            table.truncated = true;
            table.truncation_reason = e.what();
            break;
        }
    }
    for (int n = 1; n <= static_cast<int>(pres.size()); ++n) {
        StabilityRow row;
        row.n = n;
        row.h1 = pres[n - 1].pres.abelianization().to_string();
        if (n < static_cast<int>(pres.size())) {
            InclusionH1 inc =
                inclusion_h1_from(family_of(n), family_of(n + 1), pres[n - 1], pres[n]);
            row.has_map = true;
            row.iso = inc.iso;
            row.epi = inc.epi;
            row.mono = inc.mono;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

struct H1FrThetaRule final : FunctorRule {
    GroupFamily fam;
    std::map<unsigned, FRPresentation> memo;  // label mask -> presentation

    explicit H1FrThetaRule(GroupFamily f) : fam(std::move(f)) {
        for (unsigned mask = 0; mask < (1u << fam.size()); ++mask) {
            std::vector<int> labels;
            for (int e = 0; e < fam.size(); ++e)
                if (mask & (1u << e)) labels.push_back(e);
            memo.emplace(mask, fr_presentation(fam.subfamily(labels)));
        }
    }
    Variance variance() const override { return Variance::Covariant; }
    std::string name() const override { return fmt::format("H1FR<{}>", fam.to_string()); }

    std::vector<int> labels_of(const PointedSetTuple& x) const {
        std::vector<int> labels;
        for (int e = 0; e < x.coords(); ++e) {
            if (x.parts_at(e) > 1)
                throw StructuralError("h1_fr_theta_rule: subset shapes carry at most one part");
            if (x.parts_at(e) == 1) labels.push_back(e);
        }
        return labels;
    }
    const FRPresentation& presentation_of(const std::vector<int>& labels) const {
        unsigned mask = 0;
        for (int e : labels) mask |= 1u << e;
        return memo.at(mask);
    }

    std::pair<int, IntMatrix> value(const PointedSetTuple& x) const override {
        const FRPresentation& fr = presentation_of(labels_of(x));
        return {fr.pres.ngens(), fr.pres.relation_matrix()};
    }

    IntMatrix action(const PointedSetTuple& src, const PointedSetTuple& dst,
                     const std::vector<int>& slot_map) const override {
        std::vector<int> src_labels = labels_of(src), dst_labels = labels_of(dst);
        const FRPresentation& fr_src = presentation_of(src_labels);
        const FRPresentation& fr_dst = presentation_of(dst_labels);
        // slot s of src corresponds to src_labels[s]; the morphisms here are
        // label-preserving, so translate through global labels
        std::vector<int> global_to_dst(fam.size(), -1);
        for (size_t k = 0; k < dst_labels.size(); ++k) global_to_dst[dst_labels[k]] = static_cast<int>(k);
        IntMatrix m(fr_dst.pres.ngens(), fr_src.pres.ngens());
        for (size_t k = 0; k < fr_src.gens.size(); ++k) {
            const auto& gen = fr_src.gens[k];
            const int gi = src_labels[gen.i], gj = src_labels[gen.j];
            const int si = slot_map[gen.i], sj = slot_map[gen.j];
            if (si < 0 || sj < 0) continue;  // a label dies: generator to identity
            const int di = dst.coord_part_of_slot(si).first, dj = dst.coord_part_of_slot(sj).first;
            if (di != gi || dj != gj)
                throw StructuralError("h1_fr_theta_rule: only label-preserving maps are supported");
            m.at(fr_dst.gen_id(global_to_dst[di], global_to_dst[dj], gen.g), static_cast<int>(k)) = 1;
        }
        return m;
    }
};

}  // namespace

std::unique_ptr<FunctorRule> h1_fr_theta_rule(const GroupFamily& fam) {
    return std::make_unique<H1FrThetaRule>(fam);
}

std::vector<PointedSetTuple> theta_subset_shapes(int labels) {
    std::vector<PointedSetTuple> shapes;
    for (unsigned mask = 0; mask < (1u << labels); ++mask) {
        std::vector<int> counts(labels, 0);
        for (int e = 0; e < labels; ++e)
            if (mask & (1u << e)) counts[e] = 1;
        shapes.push_back(PointedSetTuple::shape(counts));
    }
    return shapes;
}

}  // namespace autfp
