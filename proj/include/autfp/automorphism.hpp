#pragma once

#include "autfp/tree.hpp"
#include "autfp/word.hpp"

namespace autfp {

/// Symmetric automorphism of a free product in canonical data form: a letter
/// g of factor e maps to conj[e] * iso[e](g) * conj[e]^-1 with iso[e] an
/// isomorphism table G_e -> G_{perm[e]}.
///
/// Composition is diagrammatic throughout: compose(a, b) applies a first,
/// then b. Each value carries the canonical data of its inverse alongside, so
/// inversion is a swap; generators seed both sides.
class SymmetricAutomorphism {
public:
    struct Data {
        std::vector<int> perm;               // label permutation
        std::vector<Word> conj;              // conjugator word per label
        std::vector<std::vector<int>> iso;   // iso[e][g] in G_{perm[e]}
    };

    static SymmetricAutomorphism identity(const GroupFamily& fam);
    /// alpha_{i,j}^g: conjugate factor j by the element g of factor i.
    static SymmetricAutomorphism whitehead_generator(int i, int j, int g,
                                                     const GroupFamily& fam);
    /// Permutation/iso block with trivial conjugators. iso[e] must be an
    /// isomorphism table G_e -> G_{perm[e]}.
    static SymmetricAutomorphism block(std::vector<int> perm,
                                       std::vector<std::vector<int>> iso,
                                       const GroupFamily& fam);

    const Data& data() const { return fwd_; }
    const Data& inverse_data() const { return inv_; }

    Word apply(const Word& w, const GroupFamily& fam) const;
    Word apply_letter(int label, int element, const GroupFamily& fam) const;

    /// Diagrammatic composition: this, then next.
    SymmetricAutomorphism then(const SymmetricAutomorphism& next,
                               const GroupFamily& fam) const;
    SymmetricAutomorphism inverse() const;

    /// Equal action on every single letter (automorphisms of a free product
    /// agree iff they agree on letters).
    bool same_action(const SymmetricAutomorphism& o, const GroupFamily& fam) const;
    bool is_identity_action(const GroupFamily& fam) const;

    /// Action fingerprint usable as a hash/equality key.
    std::string action_signature(const GroupFamily& fam) const;

    /// Structural well-formedness plus the automorphism check fwd o inv = id.
    void validate(const GroupFamily& fam) const;

private:
    SymmetricAutomorphism(Data fwd, Data inv) : fwd_(std::move(fwd)), inv_(std::move(inv)) {}
    static Data identity_data(const GroupFamily& fam);
    static Data compose_data(const Data& first, const Data& second, const GroupFamily& fam);
    static Word apply_data(const Data& d, const Word& w, const GroupFamily& fam);
    Data fwd_, inv_;
};

inline SymmetricAutomorphism compose(const SymmetricAutomorphism& first,
                                     const SymmetricAutomorphism& second,
                                     const GroupFamily& fam) {
    return first.then(second, fam);
}

inline Word apply_automorphism(const SymmetricAutomorphism& phi, const Word& w,
                               const GroupFamily& fam) {
    return phi.apply(w, fam);
}

/// Whitehead automorphism data: operating factor and one coefficient per
/// other label (identity coefficients allowed).
struct WhiteheadData {
    int operating_label = -1;
    std::vector<int> coefficients;  // indexed by label; entry at the operating
                                    // label must be 0 and is ignored

    WhiteheadData(int ell, std::vector<int> coeffs, const GroupFamily& fam);

    SymmetricAutomorphism to_automorphism(const GroupFamily& fam) const;
};

/// True iff the data is supported by the tree: coefficients agree on labels
/// in the same component of A minus the operating vertex and vanish on the
/// root component.
bool is_supported_by(const WhiteheadData& w, const TreeJ& a, const GroupFamily& fam);

}  // namespace autfp
