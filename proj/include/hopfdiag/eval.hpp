#pragma once

#include "bundle.hpp"
#include "network.hpp"
#include "term.hpp"

#include <array>

namespace hopfdiag {

inline const Mat& bundle_tensor(const CoendBundle& b, Gen g) {
    switch (g) {
        case Gen::Delta: return b.delta;
        case Gen::Eps: return b.eps;
        case Gen::S: return b.S;
        case Gen::Sinv: return b.Sinv;
        case Gen::OmegaPlus: return b.omega_plus;
        case Gen::OmegaMinus: return b.omega_minus;
        case Gen::ThetaPlus: return b.theta_plus;
        case Gen::ThetaMinus: return b.theta_minus;
        case Gen::BraidPlus: return b.c;
        case Gen::BraidMinus: return b.cinv;
    }
    throw std::logic_error("unknown generator");
}

// Wires of a sliced term: input wires are 0..dom-1, each slice output gets a fresh id.
struct WiredTerm {
    int n_wires = 0;
    std::vector<int> inputs, outputs;
    std::vector<std::vector<int>> slice_in, slice_out;
};

inline WiredTerm wire_term(const BraidedTerm& t) {
    WiredTerm w;
    std::vector<int> cur(t.dom);
    for (int k = 0; k < t.dom; ++k) cur[k] = w.n_wires++;
    w.inputs = cur;
    for (const Slice& s : t.slices) {
        int a = arity_in(s.gen), b = arity_out(s.gen);
        std::vector<int> ins(cur.begin() + s.left, cur.begin() + s.left + a);
        std::vector<int> outs;
        for (int j = 0; j < b; ++j) outs.push_back(w.n_wires++);
        std::vector<int> nxt(cur.begin(), cur.begin() + s.left);
        nxt.insert(nxt.end(), outs.begin(), outs.end());
        nxt.insert(nxt.end(), cur.begin() + s.left + a, cur.end());
        cur = std::move(nxt);
        w.slice_in.push_back(std::move(ins));
        w.slice_out.push_back(std::move(outs));
    }
    w.outputs = cur;
    return w;
}

// Matrix of a term under a bundle: d^cod x d^dom.
inline Mat eval_term(const BraidedTerm& t, const CoendBundle& b) {
    std::array<SparseMap, 10> maps;
    for (Gen g : all_gens) maps[static_cast<int>(g)] = SparseMap(bundle_tensor(b, g));
    WiredTerm w = wire_term(t);
    std::vector<NetNode> nodes;
    nodes.reserve(t.slices.size());
    for (std::size_t k = 0; k < t.slices.size(); ++k)
        nodes.push_back(NetNode{w.slice_in[k], w.slice_out[k], &maps[static_cast<int>(t.slices[k].gen)]});
    return contract_network(nodes, w.n_wires, w.inputs, w.outputs, b.d);
}

// E(D) as an n-index tensor.
inline DenseTensor eval_diagram(const HopfDiagram& D, const CoendBundle& b) {
    return DenseTensor::from_form(eval_term(D.term, b), b.d, D.n());
}

}  // namespace hopfdiag
