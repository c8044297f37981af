#pragma once

#include "tensor.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hopfdiag {

// Row-sparse view of a linear map: rows[out] = list of (in, coefficient).
struct SparseMap {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> entries;

    SparseMap() = default;
    explicit SparseMap(const Mat& m) : rows(m.rows), cols(m.cols), entries(m.rows) {
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                if (!m(i, j).is_zero()) entries[i].emplace_back(j, m(i, j));
    }
};

// A node of a string-diagram network: a map from its input wires to its
// output wires (each wire carries a space of dimension d).
struct NetNode {
    std::vector<int> in, out;
    const SparseMap* map = nullptr;
};

// Contracts a network with all wires of dimension d. Each wire is produced by
// exactly one node or is a network input, and consumed by exactly one node or is
// a network output. Returns the d^|outputs| x d^|inputs| matrix.
//
// Evaluation runs top-down: the state is a sparse tensor over (outputs, frontier),
// and nodes are pulled back one at a time once all their outputs are on the
// frontier. Width-reducing nodes go first; otherwise the node that completes
// the most producers below it, lowest original index on ties.
inline Mat contract_network(const std::vector<NetNode>& nodes, int n_wires, const std::vector<int>& inputs,
                            const std::vector<int>& outputs, std::size_t d, bool sequential = false) {
    const std::size_t nn = nodes.size();
    std::vector<int> producer(n_wires, -1);
    for (std::size_t k = 0; k < nn; ++k)
        for (int w : nodes[k].out) producer[w] = static_cast<int>(k);

    std::vector<char> on_front(n_wires, 0);
    std::vector<int> front(outputs.begin(), outputs.end());
    for (int w : front) on_front[w] = 1;

    // index spaces must fit in 64 bits: d^(|outputs| + |frontier|) < 2^63
    auto checked_pow = [&](int e) {
        std::uint64_t r = 1;
        for (int k = 0; k < e; ++k) {
            if (r > (std::uint64_t{1} << 62) / d) throw std::length_error("tensor network too wide to index");
            r *= d;
        }
        return r;
    };
    const std::uint64_t no = checked_pow(static_cast<int>(outputs.size()));
    // sparse state: key o * d^|front| + f
    std::vector<std::pair<std::uint64_t, Scalar>> state;
    for (std::uint64_t o = 0; o < no; ++o) state.emplace_back(o * no + o, Scalar(1));

    std::vector<char> done(nn, 0);
    auto ready = [&](std::size_t k) {
        if (done[k]) return false;
        for (int w : nodes[k].out)
            if (!on_front[w]) return false;
        return true;
    };

    auto pull = [&](std::size_t k) {
        const NetNode& node = nodes[k];
        const int fw = static_cast<int>(front.size());
        std::vector<int> opos;
        for (int w : node.out) opos.push_back(static_cast<int>(std::find(front.begin(), front.end(), w) - front.begin()));
        std::vector<int> keep;
        for (int p = 0; p < fw; ++p)
            if (std::find(opos.begin(), opos.end(), p) == opos.end()) keep.push_back(p);
        std::vector<int> nfront;
        for (int p : keep) nfront.push_back(front[p]);
        for (int w : node.in) nfront.push_back(w);

        const std::uint64_t fsz = checked_pow(fw);
        const std::uint64_t nin = checked_pow(static_cast<int>(node.in.size()));
        const std::uint64_t nfsz = checked_pow(static_cast<int>(nfront.size()));
        checked_pow(static_cast<int>(outputs.size() + nfront.size()));
        // small index spaces accumulate densely, large ones in a hash map
        const bool dense = no * nfsz <= (std::uint64_t{1} << 20);
        std::vector<Scalar> dense_next(dense ? no * nfsz : 0);
        std::unordered_map<std::uint64_t, Scalar> sparse_next;
        if (!dense) sparse_next.reserve(state.size() * 2);
        std::vector<std::uint64_t> digit(fw);
        for (const auto& [key, v] : state) {
            const std::uint64_t o = key / fsz;
            std::uint64_t x = key % fsz;
            for (int p = fw - 1; p >= 0; --p) {
                digit[p] = x % d;
                x /= d;
            }
            std::uint64_t row = 0;
            for (int p : opos) row = row * d + digit[p];
            std::uint64_t rest = 0;
            for (int p : keep) rest = rest * d + digit[p];
            const std::uint64_t base = o * nfsz + rest * nin;
            for (const auto& [col, coef] : node.map->entries[row]) {
                Scalar& t = dense ? dense_next[base + col] : sparse_next[base + col];
                t += coef.is_one() ? v : v * coef;
            }
        }
        state.clear();
        if (dense) {
            for (std::uint64_t key = 0; key < dense_next.size(); ++key)
                if (!dense_next[key].is_zero()) state.emplace_back(key, std::move(dense_next[key]));
        } else {
            for (auto& [key, v] : sparse_next)
                if (!v.is_zero()) state.emplace_back(key, std::move(v));
        }
        for (int w : node.out) on_front[w] = 0;
        for (int w : node.in) on_front[w] = 1;
        front = std::move(nfront);
        done[k] = 1;
    };

    for (std::size_t step = 0; step < nn; ++step) {
        // sequential: nodes are listed bottom to top, pull them from the top
        int pick = sequential ? static_cast<int>(nn - 1 - step) : -1;
        for (std::size_t k = 0; k < nn && pick < 0; ++k)
            if (ready(k) && nodes[k].in.size() <= nodes[k].out.size()) pick = static_cast<int>(k);
        if (pick < 0 && !sequential) {
            long best_full = -1, best_part = -1;
            for (std::size_t k = 0; k < nn; ++k) {
                if (!ready(k)) continue;
                long full = 0, part = 0;
                std::vector<int> seen;
                for (int w : nodes[k].in) {
                    int p = producer[w];
                    if (p < 0 || std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
                    seen.push_back(p);
                    long have = 0;
                    for (int u : nodes[p].out)
                        if (on_front[u] || std::find(nodes[k].in.begin(), nodes[k].in.end(), u) != nodes[k].in.end()) ++have;
                    part += have;
                    if (have == static_cast<long>(nodes[p].out.size())) ++full;
                }
                if (full > best_full || (full == best_full && part > best_part)) {
                    best_full = full;
                    best_part = part;
                    pick = static_cast<int>(k);
                }
            }
        }
        if (pick < 0) throw std::logic_error("network has a cycle or dangling wire");
        pull(static_cast<std::size_t>(pick));
    }

    // reorder frontier to the input order
    const int fw = static_cast<int>(front.size());
    if (fw != static_cast<int>(inputs.size())) throw std::logic_error("frontier does not match network inputs");
    std::vector<int> where(fw);
    for (int q = 0; q < fw; ++q) {
        auto it = std::find(front.begin(), front.end(), inputs[q]);
        if (it == front.end()) throw std::logic_error("input wire missing from frontier");
        where[q] = static_cast<int>(it - front.begin());
    }
    const std::uint64_t fsz = checked_pow(fw);
    Mat r(no, fsz);
    std::vector<std::uint64_t> digit(fw);
    for (const auto& [key, v] : state) {
        std::uint64_t x = key % fsz;
        for (int p = fw - 1; p >= 0; --p) {
            digit[p] = x % d;
            x /= d;
        }
        std::uint64_t col = 0;
        for (int q = 0; q < fw; ++q) col = col * d + digit[where[q]];
        r(key / fsz, col) = v;
    }
    return r;
}

}  // namespace hopfdiag
