#include "autfp/poset_homology.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace autfp {

namespace {

// Coefficient groups in Smith-normalized coordinates: torsion moduli first
// (including unit ones, which resolve trivially), then free generators. The
// normalizing transform is unimodular, so strictly functorial raw actions
// stay strictly functorial, which the total complex below needs: its d^2 = 0
// only holds on the nose.
struct Normalized {
    std::vector<std::vector<mpz_class>> moduli;  // per element: divisor chain
    std::vector<int> tors, frees;
    std::vector<IntMatrix> U, Uinv;
};

Normalized normalize(const PosetView& p, const PosetCoefficients& m) {
    Normalized nf;
    nf.moduli.resize(p.size);
    nf.tors.resize(p.size);
    nf.frees.resize(p.size);
    nf.U.resize(p.size);
    nf.Uinv.resize(p.size);
    for (int i = 0; i < p.size; ++i) {
        IntMatrix rel = m.relations(i);
        if (rel.rows() != m.ngens(i))
            throw StructuralError("poset_homology: relation matrix has the wrong height");
        SnfResult s = snf(rel);
        nf.U[i] = std::move(s.U);
        nf.Uinv[i] = std::move(s.Uinv);
        nf.moduli[i] = s.divisors;
        nf.tors[i] = s.rank;
        nf.frees[i] = rel.rows() - s.rank;
    }
    return nf;
}

// torsion-level lift: phi1[b][a] = N[b][a] * d_a / d_b; integrality and the
// vanishing of free rows on torsion columns are exactly relation
// compatibility of the action
IntMatrix torsion_lift(const Normalized& nf, const IntMatrix& n, int i, int j) {
    IntMatrix lift(nf.tors[j], nf.tors[i]);
    for (int a = 0; a < nf.tors[i]; ++a) {
        for (int b = 0; b < nf.tors[j]; ++b) {
            mpz_class num = n.at(b, a) * nf.moduli[i][a];
            if (num % nf.moduli[j][b] != 0)
                throw StructuralError("poset_homology: action does not respect torsion relations");
            lift.at(b, a) = num / nf.moduli[j][b];
        }
        for (int b = nf.tors[j]; b < n.rows(); ++b)
            if (n.at(b, a) * nf.moduli[i][a] != 0)
                throw StructuralError("poset_homology: torsion generator maps to a free one");
    }
    return lift;
}

}  // namespace

std::vector<FgAbGroup> poset_homology(const PosetView& p, const PosetCoefficients& m, int nmax,
                                      bool validate) {
    Normalized nf = normalize(p, m);

    // chains[n] = strictly increasing index sequences of length n+1, in
    // lexicographic order (the construction preserves it)
    std::vector<std::vector<std::vector<int>>> chains(nmax + 2);
    for (int i = 0; i < p.size; ++i) chains[0].push_back({i});
    for (int n = 1; n <= nmax + 1; ++n)
        for (const auto& c : chains[n - 1])
            for (int j = 0; j < p.size; ++j)
                if (p.less(c.back(), j)) {
                    auto ext = c;
                    ext.push_back(j);
                    chains[n].push_back(std::move(ext));
                }

    std::map<std::pair<int, int>, IntMatrix> acts;
    auto act = [&](int i, int j) -> const IntMatrix& {
        auto key = std::make_pair(i, j);
        auto it = acts.find(key);
        if (it == acts.end()) it = acts.emplace(key, nf.U[j] * m.action(i, j) * nf.Uinv[i]).first;
        return it->second;
    };

    if (validate) {
        for (const auto& c : chains[2])
            if (!(act(c[1], c[2]) * act(c[0], c[1]) == act(c[0], c[2])))
                throw StructuralError(
                    "poset_homology: coefficient actions are not strictly functorial");
    }

    // total complex: degree n = (n-chains, generator block) + ((n-1)-chains,
    // torsion block of the chain head)
    std::vector<std::vector<int>> gen_pos(nmax + 2), tor_pos(nmax + 2);
    std::vector<int> dims(nmax + 2, 0);
    for (int n = 0; n <= nmax + 1; ++n) {
        int off = 0;
        gen_pos[n].resize(chains[n].size());
        for (size_t c = 0; c < chains[n].size(); ++c) {
            gen_pos[n][c] = off;
            off += nf.tors[chains[n][c][0]] + nf.frees[chains[n][c][0]];
        }
        if (n >= 1) {
            tor_pos[n].resize(chains[n - 1].size());
            for (size_t c = 0; c < chains[n - 1].size(); ++c) {
                tor_pos[n][c] = off;
                off += nf.tors[chains[n - 1][c][0]];
            }
        }
        dims[n] = off;
    }

    auto face_index = [&](int n, const std::vector<int>& face) {
        const auto it = std::lower_bound(chains[n].begin(), chains[n].end(), face);
        if (it == chains[n].end() || *it != face)
            throw StructuralError("poset_homology: face lookup failed");
        return static_cast<size_t>(it - chains[n].begin());
    };

    std::vector<SparseIntMatrix> d(nmax + 2);
    for (int n = 1; n <= nmax + 1; ++n) {
        SparseIntMatrix dn(dims[n - 1], dims[n]);
        // generator blocks: horizontal faces only
        for (size_t c = 0; c < chains[n].size(); ++c) {
            const auto& ch = chains[n][c];
            const int src = gen_pos[n][c];
            const int width = nf.tors[ch[0]] + nf.frees[ch[0]];
            int sign = 1;
            for (int drop = 0; drop <= n; ++drop, sign = -sign) {
                std::vector<int> face;
                face.reserve(n);
                for (int t = 0; t <= n; ++t)
                    if (t != drop) face.push_back(ch[t]);
                const int dst = gen_pos[n - 1][face_index(n - 1, face)];
                if (drop == 0) {
                    const IntMatrix& a = act(ch[0], ch[1]);
                    for (int r = 0; r < a.rows(); ++r)
                        for (int col = 0; col < a.cols(); ++col)
                            if (a.at(r, col) != 0) dn.add(dst + r, src + col, sign * a.at(r, col));
                } else {
                    for (int k = 0; k < width; ++k) dn.add(dst + k, src + k, sign);
                }
            }
        }
        // torsion blocks over (n-1)-chains
        for (size_t c = 0; c < chains[n - 1].size(); ++c) {
            const auto& ch = chains[n - 1][c];
            const int src = tor_pos[n][c];
            // vertical part, sign (-1)^(n-1)
            const int vsign = ((n - 1) % 2 == 0) ? 1 : -1;
            for (int k = 0; k < nf.tors[ch[0]]; ++k)
                dn.add(gen_pos[n - 1][c] + k, src + k, vsign * nf.moduli[ch[0]][k]);
            // horizontal faces into the torsion blocks one degree down
            if (n >= 2) {
                int sign = 1;
                for (int drop = 0; drop <= n - 1; ++drop, sign = -sign) {
                    std::vector<int> face;
                    for (int t = 0; t <= n - 1; ++t)
                        if (t != drop) face.push_back(ch[t]);
                    const int dst = tor_pos[n - 1][face_index(n - 2, face)];
                    if (drop == 0) {
                        IntMatrix lift = torsion_lift(nf, act(ch[0], ch[1]), ch[0], ch[1]);
                        for (int r = 0; r < lift.rows(); ++r)
                            for (int col = 0; col < lift.cols(); ++col)
                                if (lift.at(r, col) != 0)
                                    dn.add(dst + r, src + col, sign * lift.at(r, col));
                    } else {
                        for (int k = 0; k < nf.tors[ch[0]]; ++k) dn.add(dst + k, src + k, sign);
                    }
                }
            }
        }
        d[n] = std::move(dn);
    }

    ChainComplexZ total(std::move(dims), std::move(d));
    std::vector<FgAbGroup> h;
    for (int n = 0; n <= nmax; ++n) h.push_back(total.homology(n));
    return h;
}

std::vector<FgAbGroup> poset_homology_constant(const PosetView& p, int nmax) {
    PosetCoefficients m{
        [](int) { return 1; },
        [](int) { return IntMatrix(1, 0); },
        [](int, int) { return IntMatrix::identity(1); },
    };
    return poset_homology(p, m, nmax, false);
}

}  // namespace autfp
