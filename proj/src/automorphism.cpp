#include "autfp/automorphism.hpp"

#include <fmt/format.h>

namespace autfp {

SymmetricAutomorphism::Data SymmetricAutomorphism::identity_data(const GroupFamily& fam) {
    Data d;
    d.perm.resize(fam.size());
    d.conj.assign(fam.size(), Word::empty());
    d.iso.resize(fam.size());
    for (int e = 0; e < fam.size(); ++e) {
        d.perm[e] = e;
        d.iso[e].resize(fam.factor(e).order());
        for (int g = 0; g < fam.factor(e).order(); ++g) d.iso[e][g] = g;
    }
    return d;
}

SymmetricAutomorphism SymmetricAutomorphism::identity(const GroupFamily& fam) {
    Data d = identity_data(fam);
    return SymmetricAutomorphism(d, d);
}

SymmetricAutomorphism SymmetricAutomorphism::whitehead_generator(int i, int j, int g,
                                                                 const GroupFamily& fam) {
    if (i == j)
        throw StructuralError("whitehead_generator: the operating factor may not conjugate itself");
    if (i < 0 || i >= fam.size() || j < 0 || j >= fam.size())
        throw StructuralError("whitehead_generator: unknown label");
    if (g < 0 || g >= fam.factor(i).order())
        throw StructuralError("whitehead_generator: element out of range");
    Data fwd = identity_data(fam);
    Data inv = identity_data(fam);
    if (g != 0) {
        fwd.conj[j] = Word::letter(i, g, fam);
        inv.conj[j] = Word::letter(i, fam.factor(i).inv(g), fam);
    }
    return SymmetricAutomorphism(std::move(fwd), std::move(inv));
}

SymmetricAutomorphism SymmetricAutomorphism::block(std::vector<int> perm,
                                                   std::vector<std::vector<int>> iso,
                                                   const GroupFamily& fam) {
    const int n = fam.size();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(iso.size()) != n)
        throw StructuralError("block: data size mismatch");
    std::vector<char> hit(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v]) throw StructuralError("block: perm is not a permutation");
        hit[v] = 1;
    }
    Data fwd;
    fwd.perm = perm;
    fwd.conj.assign(n, Word::empty());
    fwd.iso = iso;
    Data inv;
    inv.perm.resize(n);
    inv.conj.assign(n, Word::empty());
    inv.iso.resize(n);
    for (int e = 0; e < n; ++e) {
        const FiniteGroup& src = fam.factor(e);
        const FiniteGroup& dst = fam.factor(perm[e]);
        if (src.order() != dst.order() || static_cast<int>(iso[e].size()) != src.order())
            throw StructuralError("block: iso table has the wrong size");
        std::vector<char> seen(dst.order(), 0);
        for (int g = 0; g < src.order(); ++g) {
            int x = iso[e][g];
            if (x < 0 || x >= dst.order() || seen[x])
                throw StructuralError("block: iso table is not bijective");
            seen[x] = 1;
        }
        for (int a = 0; a < src.order(); ++a)
            for (int b = 0; b < src.order(); ++b)
                if (iso[e][src.mul(a, b)] != dst.mul(iso[e][a], iso[e][b]))
                    throw StructuralError("block: iso table is not multiplicative");
        inv.perm[perm[e]] = e;
        inv.iso[perm[e]].resize(src.order());
        for (int g = 0; g < src.order(); ++g) inv.iso[perm[e]][iso[e][g]] = g;
    }
    return SymmetricAutomorphism(std::move(fwd), std::move(inv));
}

Word SymmetricAutomorphism::apply_data(const Data& d, const Word& w, const GroupFamily& fam) {
    Word out = Word::empty();
    for (const Letter& l : w.letters()) {
        const Word& c = d.conj[l.label];
        Word piece = c.mul(Word::letter(d.perm[l.label], d.iso[l.label][l.element], fam), fam)
                         .mul(c.inverse(fam), fam);
        out = out.mul(piece, fam);
    }
    return out;
}

Word SymmetricAutomorphism::apply(const Word& w, const GroupFamily& fam) const {
    return apply_data(fwd_, w, fam);
}

Word SymmetricAutomorphism::apply_letter(int label, int element, const GroupFamily& fam) const {
    return apply_data(fwd_, Word::letter(label, element, fam), fam);
}

SymmetricAutomorphism::Data SymmetricAutomorphism::compose_data(const Data& first,
                                                                const Data& second,
                                                                const GroupFamily& fam) {
    // letter e: first sends it into factor first.perm[e] conjugated by
    // first.conj[e]; then second acts on the whole word
    const int n = fam.size();
    Data d;
    d.perm.resize(n);
    d.conj.resize(n);
    d.iso.resize(n);
    for (int e = 0; e < n; ++e) {
        const int m = first.perm[e];
        d.perm[e] = second.perm[m];
        d.conj[e] = apply_data(second, first.conj[e], fam).mul(second.conj[m], fam);
        d.iso[e].resize(fam.factor(e).order());
        for (int g = 0; g < fam.factor(e).order(); ++g)
            d.iso[e][g] = second.iso[m][first.iso[e][g]];
    }
    return d;
}

SymmetricAutomorphism SymmetricAutomorphism::then(const SymmetricAutomorphism& next,
                                                  const GroupFamily& fam) const {
    return SymmetricAutomorphism(compose_data(fwd_, next.fwd_, fam),
                                 compose_data(next.inv_, inv_, fam));
}

SymmetricAutomorphism SymmetricAutomorphism::inverse() const {
    return SymmetricAutomorphism(inv_, fwd_);
}

bool SymmetricAutomorphism::same_action(const SymmetricAutomorphism& o,
                                        const GroupFamily& fam) const {
    for (int e = 0; e < fam.size(); ++e)
        for (int g = 1; g < fam.factor(e).order(); ++g)
            if (!(apply_letter(e, g, fam) == o.apply_letter(e, g, fam))) return false;
    return true;
}

bool SymmetricAutomorphism::is_identity_action(const GroupFamily& fam) const {
    for (int e = 0; e < fam.size(); ++e)
        for (int g = 1; g < fam.factor(e).order(); ++g) {
            Word img = apply_letter(e, g, fam);
            if (img.length() != 1 || !(img.letters()[0] == Letter{e, g})) return false;
        }
    return true;
}

std::string SymmetricAutomorphism::action_signature(const GroupFamily& fam) const {
    std::string s;
    for (int e = 0; e < fam.size(); ++e)
        for (int g = 1; g < fam.factor(e).order(); ++g)
            s += apply_letter(e, g, fam).to_string() + ";";
    return s;
}

void SymmetricAutomorphism::validate(const GroupFamily& fam) const {
    const int n = fam.size();
    if (static_cast<int>(fwd_.perm.size()) != n || static_cast<int>(fwd_.iso.size()) != n ||
        static_cast<int>(fwd_.conj.size()) != n)
        throw StructuralError("SymmetricAutomorphism: data size mismatch");
    if (!then(inverse(), fam).is_identity_action(fam) ||
        !inverse().then(*this, fam).is_identity_action(fam))
        throw StructuralError("SymmetricAutomorphism: inverse data does not invert the action");
}

WhiteheadData::WhiteheadData(int ell, std::vector<int> coeffs, const GroupFamily& fam)
    : operating_label(ell), coefficients(std::move(coeffs)) {
    if (ell < 0 || ell >= fam.size()) throw StructuralError("WhiteheadData: unknown label");
    if (static_cast<int>(coefficients.size()) != fam.size())
        throw StructuralError("WhiteheadData: coefficients must be indexed by the label set");
    for (int e = 0; e < fam.size(); ++e) {
        if (e == ell) {
            if (coefficients[e] != 0)
                throw StructuralError("WhiteheadData: the operating label takes no coefficient");
        } else if (coefficients[e] < 0 || coefficients[e] >= fam.factor(ell).order()) {
            throw StructuralError("WhiteheadData: coefficient out of range");
        }
    }
}

SymmetricAutomorphism WhiteheadData::to_automorphism(const GroupFamily& fam) const {
    SymmetricAutomorphism phi = SymmetricAutomorphism::identity(fam);
    for (int e = 0; e < fam.size(); ++e)
        if (e != operating_label && coefficients[e] != 0)
            phi = phi.then(
                SymmetricAutomorphism::whitehead_generator(operating_label, e, coefficients[e], fam),
                fam);
    return phi;
}

namespace {

const LabelNode* find_label(const MuteNode& m, int target) {
    for (const auto& l : m.children) {
        if (l.label == target) return &l;
        for (const auto& mm : l.children)
            if (const LabelNode* r = find_label(mm, target)) return r;
    }
    return nullptr;
}

void gather_labels(const MuteNode& m, std::vector<int>& out) {
    for (const auto& l : m.children) {
        out.push_back(l.label);
        for (const auto& mm : l.children) gather_labels(mm, out);
    }
}

}  // namespace

bool is_supported_by(const WhiteheadData& w, const TreeJ& a, const GroupFamily& fam) {
    if (a.label_count() != fam.size())
        throw StructuralError("is_supported_by: label set mismatch");
    const LabelNode* op = find_label(a.top(), w.operating_label);
    if (!op) throw StructuralError("is_supported_by: operating label not in tree");
    // non-root components of A minus the operating vertex sit under its mute
    // children; everything else is the root component
    std::vector<char> in_part(fam.size(), 0);
    for (const auto& m : op->children) {
        std::vector<int> labels;
        gather_labels(m, labels);
        int first = -1;
        for (int lbl : labels) {
            in_part[lbl] = 1;
            if (first == -1)
                first = w.coefficients[lbl];
            else if (w.coefficients[lbl] != first)
                return false;  // same component, different coefficients
        }
    }
    for (int e = 0; e < fam.size(); ++e)
        if (e != w.operating_label && !in_part[e] && w.coefficients[e] != 0)
            return false;  // root component must carry the identity
    return true;
}

}  // namespace autfp
