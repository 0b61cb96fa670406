#include "autfp/presentation.hpp"

#include <fmt/format.h>

namespace autfp {

int Presentation::add_generator(const std::string& name) {
    generators.push_back(name);
    return ngens() - 1;
}

void Presentation::add_relator(std::vector<int> word) {
    for (int s : word)
        if (s == 0 || std::abs(s) > ngens())
            throw StructuralError("Presentation: relator references an unknown generator");
    relators.push_back(std::move(word));
}

int Presentation::generator_id(const std::string& name) const {
    for (int i = 0; i < ngens(); ++i)
        if (generators[i] == name) return i;
    return -1;
}

void Presentation::validate() const {
    for (const auto& r : relators)
        for (int s : r)
            if (s == 0 || std::abs(s) > ngens())
                throw StructuralError("Presentation: relator references an unknown generator");
}

IntMatrix Presentation::relation_matrix() const {
    IntMatrix m(ngens(), static_cast<int>(relators.size()));
    for (size_t c = 0; c < relators.size(); ++c)
        for (int s : relators[c]) m.at(std::abs(s) - 1, static_cast<int>(c)) += (s > 0 ? 1 : -1);
    return m;
}

FgAbGroup Presentation::abelianization() const {
    return FgAbGroup::cokernel(relation_matrix());
}

namespace {

// Rows of U picking out the non-unit normalized coordinates, and the residue
// moduli of those rows (0 for free coordinates).
struct NormalForm {
    SnfResult snf_res;
    std::vector<int> keep;          // coordinate rows kept
    std::vector<mpz_class> moduli;  // per kept row; 0 = free
};

NormalForm normal_form(const IntMatrix& relations) {
    NormalForm nf{snf(relations), {}, {}};
    for (int i = 0; i < relations.rows(); ++i) {
        if (i < nf.snf_res.rank) {
            if (nf.snf_res.S.at(i, i) != 1) {
                nf.keep.push_back(i);
                nf.moduli.push_back(nf.snf_res.S.at(i, i));
            }
        } else {
            nf.keep.push_back(i);
            nf.moduli.emplace_back(0);
        }
    }
    return nf;
}

}  // namespace

InducedH1 h1_induced_map(const Presentation& src, const Presentation& dst,
                         const std::vector<std::vector<int>>& images) {
    if (static_cast<int>(images.size()) != src.ngens())
        throw StructuralError("h1_induced_map: one image word per source generator required");
    InducedH1 out;
    out.exponent_matrix = IntMatrix(dst.ngens(), src.ngens());
    for (int g = 0; g < src.ngens(); ++g)
        for (int s : images[g]) {
            if (s == 0 || std::abs(s) > dst.ngens())
                throw StructuralError("h1_induced_map: image word references unknown generator");
            out.exponent_matrix.at(std::abs(s) - 1, g) += (s > 0 ? 1 : -1);
        }
    IntMatrix r_src = src.relation_matrix();
    IntMatrix r_dst = dst.relation_matrix();
    // each relator must become a consequence, at least abelianized
    if (!lattice_contains(r_dst, out.exponent_matrix * r_src))
        throw IncompatibilityError("h1_induced_map: a relator image leaves the relation lattice");

    out.src = FgAbGroup::cokernel(r_src);
    out.dst = FgAbGroup::cokernel(r_dst);

    NormalForm nf_src = normal_form(r_src);
    NormalForm nf_dst = normal_form(r_dst);
    IntMatrix full = nf_dst.snf_res.U * out.exponent_matrix * nf_src.snf_res.Uinv;
    out.normalized = full.select_rows(nf_dst.keep).select_cols(nf_src.keep);
    for (int i = 0; i < out.normalized.rows(); ++i)
        if (nf_dst.moduli[i] != 0)
            for (int j = 0; j < out.normalized.cols(); ++j)
                mpz_fdiv_r(out.normalized.at(i, j).get_mpz_t(), out.normalized.at(i, j).get_mpz_t(),
                           nf_dst.moduli[i].get_mpz_t());

    // epi: the images together with dst relations span everything
    QuotientInvariants coker = cokernel_invariants(out.exponent_matrix.hconcat(r_dst));
    out.epi = coker.free_rank == 0 && coker.torsion.empty();
    // mono: preimage of the dst relation lattice is no bigger than the src one
    IntMatrix pre = preimage_lattice(out.exponent_matrix, r_dst).hconcat(r_src);
    QuotientInvariants ker = lattice_quotient(pre, r_src);
    out.mono = ker.free_rank == 0 && ker.torsion.empty();
    out.iso = out.epi && out.mono;
    return out;
}

}  // namespace autfp
