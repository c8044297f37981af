#pragma once

#include "term.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hopfdiag {

// Planar wire graph of a sliced term. Nodes keep their generator and ordered
// input/output wires; slice heights are forgotten.
struct DGraph {
    struct Node {
        Gen gen;
        std::vector<int> in, out;
        bool alive = true;
    };

    int n_wires = 0;
    std::vector<int> inputs, outputs;
    std::vector<Node> nodes;

    int fresh_wire() { return n_wires++; }

    static DGraph from_term(const BraidedTerm& t) {
        DGraph g;
        std::vector<int> cur;
        for (int k = 0; k < t.dom; ++k) cur.push_back(g.fresh_wire());
        g.inputs = cur;
        for (const Slice& s : t.slices) g.add_slice(cur, s);
        g.outputs = cur;
        return g;
    }

    // Appends the node for slice s acting on the wire line cur.
    int add_slice(std::vector<int>& cur, const Slice& s) {
        const int a = arity_in(s.gen), b = arity_out(s.gen);
        Node n{s.gen, {cur.begin() + s.left, cur.begin() + s.left + a}, {}, true};
        for (int j = 0; j < b; ++j) n.out.push_back(fresh_wire());
        std::vector<int> nxt(cur.begin(), cur.begin() + s.left);
        nxt.insert(nxt.end(), n.out.begin(), n.out.end());
        nxt.insert(nxt.end(), cur.begin() + s.left + a, cur.end());
        cur = std::move(nxt);
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    // producer[w] = node id or -1 for a term input; consumer[w] = (node, leg) or (-1, output index)
    struct Index {
        std::vector<int> producer, consumer, leg;
    };

    Index index() const {
        Index ix{std::vector<int>(n_wires, -1), std::vector<int>(n_wires, -1), std::vector<int>(n_wires, -1)};
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (!nodes[k].alive) continue;
            for (int w : nodes[k].out) ix.producer[w] = static_cast<int>(k);
            for (std::size_t l = 0; l < nodes[k].in.size(); ++l) {
                ix.consumer[nodes[k].in[l]] = static_cast<int>(k);
                ix.leg[nodes[k].in[l]] = static_cast<int>(l);
            }
        }
        for (std::size_t q = 0; q < outputs.size(); ++q) ix.leg[outputs[q]] = static_cast<int>(q);
        return ix;
    }

    // Every use of wire `from` (node input or term output) now uses `to`.
    void redirect(int from, int to) {
        for (auto& n : nodes) {
            if (!n.alive) continue;
            for (int& w : n.in)
                if (w == from) w = to;
        }
        for (int& w : outputs)
            if (w == from) w = to;
    }

    // Replaces the region between wires `ins` and `outs` by fragment f
    // (dom f = |ins|, cod f = |outs|). The old nodes must already be removed.
    void splice(const BraidedTerm& f, const std::vector<int>& ins, const std::vector<int>& outs) {
        if (f.dom != static_cast<int>(ins.size()) || f.cod() != static_cast<int>(outs.size()))
            throw std::logic_error("fragment arity does not match the replaced region");
        std::vector<int> cur = ins;
        const std::size_t first_new = nodes.size();
        for (const Slice& s : f.slices) add_slice(cur, s);
        for (std::size_t j = 0; j < outs.size(); ++j) {
            int w = cur[j];
            bool rewired = false;
            for (std::size_t k = first_new; k < nodes.size() && !rewired; ++k)
                for (int& o : nodes[k].out)
                    if (o == w) {
                        o = outs[j];
                        rewired = true;
                    }
            if (!rewired) redirect(outs[j], w);
        }
    }

    std::vector<int> depths(const Index& ix) const {
        std::vector<int> depth(nodes.size(), -1);
        // nodes are stored so that producers precede consumers only initially;
        // iterate to a fixpoint to be safe after splicing
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                if (!nodes[k].alive) continue;
                int dmax = 0;
                bool known = true;
                for (int w : nodes[k].in) {
                    int p = ix.producer[w];
                    if (p < 0) continue;
                    if (depth[p] < 0) {
                        known = false;
                        break;
                    }
                    dmax = std::max(dmax, depth[p]);
                }
                if (known && depth[k] != dmax + 1) {
                    depth[k] = dmax + 1;
                    changed = true;
                }
            }
        }
        return depth;
    }

    // Interchange normal form: repeatedly emit the available node of least
    // depth, leftmost on ties. `order` receives the node ids in emission order.
    BraidedTerm to_term(std::vector<int>* order = nullptr) const {
        const Index ix = index();
        const std::vector<int> depth = depths(ix);
        BraidedTerm t;
        t.dom = static_cast<int>(inputs.size());
        std::vector<int> cur = inputs;
        std::vector<char> done(nodes.size(), 0);
        std::size_t remaining = 0;
        for (const auto& n : nodes) remaining += n.alive ? 1 : 0;
        while (remaining > 0) {
            int best = -1, best_pos = 0;
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                const Node& n = nodes[k];
                if (!n.alive || done[k]) continue;
                auto it = std::find(cur.begin(), cur.end(), n.in[0]);
                if (it == cur.end()) continue;
                int pos = static_cast<int>(it - cur.begin());
                if (pos + static_cast<int>(n.in.size()) > static_cast<int>(cur.size())) continue;
                bool adj = true;
                for (std::size_t l = 1; l < n.in.size(); ++l)
                    if (cur[pos + l] != n.in[l]) adj = false;
                if (!adj) continue;
                if (best < 0 || depth[k] < depth[best] || (depth[k] == depth[best] && pos < best_pos)) {
                    best = static_cast<int>(k);
                    best_pos = pos;
                }
            }
            if (best < 0) throw std::logic_error("diagram graph is not serializable");
            const Node& n = nodes[best];
            const int a = static_cast<int>(n.in.size());
            t.slices.push_back(Slice{best_pos, n.gen, static_cast<int>(cur.size()) - best_pos - a});
            std::vector<int> nxt(cur.begin(), cur.begin() + best_pos);
            nxt.insert(nxt.end(), n.out.begin(), n.out.end());
            nxt.insert(nxt.end(), cur.begin() + best_pos + a, cur.end());
            cur = std::move(nxt);
            done[best] = 1;
            if (order) order->push_back(best);
            --remaining;
        }
        if (cur != outputs) throw std::logic_error("serialization does not end at the codomain");
        return t;
    }
};

}  // namespace hopfdiag
