#pragma once

#include "presentation.hpp"
#include "relations.hpp"
#include "term.hpp"

namespace hopfdiag {

inline HopfDiagram letter_diagram(const PureLetter& l, int n) {
    return l.twist ? omega_diagram(l.i, n, l.sign) : sigma_diagram(l.i, l.j, n, l.sign);
}

// Letters composed by convolution in word order.
inline HopfDiagram psi0(const PureBraidWord& P) {
    P.check();
    HopfDiagram D = conv_identity(P.n);
    bool first = true;
    for (const auto& l : P.letters) {
        D = first ? letter_diagram(l, P.n) : conv_compose(D, letter_diagram(l, P.n));
        first = false;
    }
    return D;
}

// Gadget of C_i: input i-1 of the result is split by Delta^{(2)} into inputs
// i-1, i, i+1 of D, the middle leg through S.
struct ContractionGadget {
    Gen middle = Gen::S;
};

inline HopfDiagram contract_C(const HopfDiagram& D, int i, ContractionGadget g = {}) {
    const int n = D.n();
    if (i <= 1 || i >= n) throw term_error("contraction index " + std::to_string(i) + " out of range for " + std::to_string(n) + " inputs");
    BraidedTerm t(n - 2, {Slice{i - 2, Gen::Delta, n - i - 1}, Slice{i - 2, Gen::Delta, n - i}, Slice{i - 1, g.middle, n - i}});
    return HopfDiagram(term_compose(t, D.term));
}

// (Omega_1^{a_1} ... Omega_n^{a_n}) * C_{j_m} ... C_{j_1} Psi0(P)
inline HopfDiagram psi_full(const StringLinkPresentation& T) {
    T.check();
    HopfDiagram D = psi0(T.P);
    for (int j : T.contractions) D = contract_C(D, j);
    const int n = T.n();
    std::vector<HopfDiagram> parts;
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < std::abs(T.twists[k]); ++r) parts.push_back(omega_diagram(k + 1, n, T.twists[k] > 0 ? 1 : -1));
    if (parts.empty()) return D;
    parts.push_back(D);
    return conv_chain(parts);
}

inline HopfDiagram psi_full(const TangleWord& w) { return psi_full(extract_presentation(w)); }

// Handle fragment of one generator acting on the pairs starting at 1-based
// position p (each Hopf wire is a pair: V* going down, V going up).
inline std::vector<TangleEvent> phi_fragment(Gen g, int p) {
    using E = TangleEvent;
    switch (g) {
        case Gen::Eps: return {E::cap(p)};
        case Gen::Delta: return {E::cup(p + 1)};
        case Gen::ThetaPlus:
        case Gen::ThetaMinus: {
            auto r = curl_events(p + 1, g == Gen::ThetaPlus ? 1 : -1);
            r.push_back(E::cap(p));
            return r;
        }
        case Gen::S:
        case Gen::Sinv: {
            const int s = g == Gen::S ? 1 : -1;
            return {E::cup(p), E::cross(p + 2, s), E::cross(p + 1, s), E::cap(p)};
        }
        case Gen::OmegaMinus: return {E::cross(p + 1, 1), E::cross(p + 1, 1), E::cap(p + 2), E::cap(p)};
        case Gen::OmegaPlus: {
            auto r = phi_fragment(Gen::Sinv, p);
            auto w = phi_fragment(Gen::OmegaMinus, p);
            r.insert(r.end(), w.begin(), w.end());
            return r;
        }
        case Gen::BraidPlus: return {E::cross(p + 1, 1), E::cross(p, 1), E::cross(p + 2, 1), E::cross(p + 1, 1)};
        case Gen::BraidMinus: return {E::cross(p + 1, -1), E::cross(p + 2, -1), E::cross(p, -1), E::cross(p + 1, -1)};
    }
    throw std::logic_error("unknown generator");
}

// Ribbon handle of a Hopf diagram, slices stacked bottom to top.
inline TangleWord phi(const HopfDiagram& D) {
    TangleWord w{2 * D.n(), {}};
    for (const Slice& s : D.term.slices) {
        auto f = phi_fragment(s.gen, 2 * s.left + 1);
        w.events.insert(w.events.end(), f.begin(), f.end());
    }
    return w;
}

inline TangleWord psi_geom(const HopfDiagram& D) { return convert_F_G(phi(D), FGDirection::to_string_link); }

}  // namespace hopfdiag
