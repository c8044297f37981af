#pragma once

#include "term.hpp"

#include <string>
#include <vector>

namespace hopfdiag {

// omega_{+-} on inputs i < j of n (1-based), eps elsewhere. The eps slices
// come first, then omega on the now adjacent pair.
inline HopfDiagram sigma_diagram(int i, int j, int n, int sign) {
    if (!(1 <= i && i < j && j <= n)) throw term_error("sigma_diagram: need 1 <= i < j <= n");
    BraidedTerm t(n);
    int width = n;
    for (int k = n; k >= 1; --k) {
        if (k == i || k == j) continue;
        t.slices.push_back(Slice{k - 1, Gen::Eps, width - k});
        --width;
    }
    t.slices.push_back(Slice{0, sign > 0 ? Gen::OmegaPlus : Gen::OmegaMinus, 0});
    t.check();
    return HopfDiagram(t);
}

// eps^{k-1} (x) theta_{+-} (x) eps^{n-k}
inline HopfDiagram omega_diagram(int k, int n, int sign) {
    if (!(1 <= k && k <= n)) throw term_error("omega_diagram: need 1 <= k <= n");
    std::vector<BraidedTerm> parts;
    for (int q = 1; q <= n; ++q)
        parts.push_back(gen_term(q == k ? (sign > 0 ? Gen::ThetaPlus : Gen::ThetaMinus) : Gen::Eps));
    return HopfDiagram(term_tensor_all(parts));
}

struct RelationInstance {
    std::string name;
    BraidedTerm lhs, rhs;
};

inline HopfDiagram conv_chain(const std::vector<HopfDiagram>& ds) {
    HopfDiagram r = ds.at(0);
    for (std::size_t k = 1; k < ds.size(); ++k) r = conv_compose(r, ds[k]);
    return r;
}

// The twist, RII, 3T and 4T relations of the quotient category, both sides as diagrams.
inline std::vector<RelationInstance> bar_relations() {
    auto on_delta = [](const BraidedTerm& a, const BraidedTerm& b) {
        return term_compose(gen_term(Gen::Delta), term_tensor(a, b));
    };
    auto g = [](Gen x) { return gen_term(x); };
    auto w = [](int i, int j, int n, int s) { return sigma_diagram(i, j, n, s); };
    auto chain = [](const std::vector<HopfDiagram>& ds) { return conv_chain(ds).term; };
    const BraidedTerm id1 = identity_term(1);
    std::vector<RelationInstance> r;
    r.push_back({"twist-side+", on_delta(id1, g(Gen::ThetaPlus)), on_delta(g(Gen::ThetaPlus), id1)});
    r.push_back({"twist-side-", on_delta(id1, g(Gen::ThetaMinus)), on_delta(g(Gen::ThetaMinus), id1)});
    r.push_back({"twist-inverse", on_delta(g(Gen::ThetaPlus), g(Gen::ThetaMinus)), g(Gen::Eps)});
    r.push_back({"twist-square+", on_delta(g(Gen::ThetaPlus), g(Gen::ThetaPlus)),
                 BraidedTerm(1, {Slice{0, Gen::Delta, 0}, Slice{0, Gen::BraidMinus, 0}, Slice{0, Gen::OmegaPlus, 0}})});
    r.push_back({"twist-square-", on_delta(g(Gen::ThetaMinus), g(Gen::ThetaMinus)),
                 BraidedTerm(1, {Slice{0, Gen::Delta, 0}, Slice{0, Gen::OmegaMinus, 0}})});
    const BraidedTerm eps2 = term_tensor(g(Gen::Eps), g(Gen::Eps));
    r.push_back({"RII+-", chain({w(1, 2, 2, 1), w(1, 2, 2, -1)}), eps2});
    r.push_back({"RII-+", chain({w(1, 2, 2, -1), w(1, 2, 2, 1)}), eps2});
    r.push_back({"3T-a", chain({w(1, 2, 3, 1), w(1, 3, 3, 1), w(2, 3, 3, 1)}), chain({w(1, 3, 3, 1), w(2, 3, 3, 1), w(1, 2, 3, 1)})});
    r.push_back({"3T-b", chain({w(1, 3, 3, 1), w(2, 3, 3, 1), w(1, 2, 3, 1)}), chain({w(2, 3, 3, 1), w(1, 2, 3, 1), w(1, 3, 3, 1)})});
    r.push_back({"4T", chain({w(1, 3, 4, 1), w(2, 3, 4, 1), w(2, 4, 4, 1), w(2, 3, 4, -1)}),
                 chain({w(2, 3, 4, 1), w(2, 4, 4, 1), w(2, 3, 4, -1), w(1, 3, 4, 1)})});
    return r;
}

}  // namespace hopfdiag
