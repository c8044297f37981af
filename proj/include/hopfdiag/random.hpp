#pragma once

#include "term.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hopfdiag {

// Seeded generator; draws are taken modulo explicitly so sequences do not
// depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 20240601) : eng_(seed) {}
    int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return below(2) == 1; }
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// Random cod-0 term: free part of at most max_slices - width slices, then
// closing forms until the width is 0. Widths stay at most max_width.
inline BraidedTerm random_term(Rng& rng, int dom, int max_slices, int max_antipodes, int max_width = 4,
                               bool allow_braids = true) {
    BraidedTerm t(dom);
    int w = dom, antipodes = 0;
    auto push = [&](Gen g) {
        int a = arity_in(g);
        int left = rng.below(w - a + 1);
        t.slices.push_back(Slice{left, g, w - left - a});
        w = w - a + arity_out(g);
    };
    int free_budget = rng.range(0, std::max(0, max_slices - w - 1));
    for (int k = 0; k < free_budget; ++k) {
        std::vector<Gen> opts;
        if (w >= 1 && w < max_width) opts.push_back(Gen::Delta);
        if (w >= 1 && antipodes < max_antipodes) {
            opts.push_back(Gen::S);
            opts.push_back(Gen::Sinv);
        }
        if (w >= 2 && allow_braids) {
            opts.push_back(Gen::BraidPlus);
            opts.push_back(Gen::BraidMinus);
        }
        if (w >= 1) {
            opts.push_back(Gen::Eps);
            opts.push_back(Gen::ThetaPlus);
            opts.push_back(Gen::ThetaMinus);
        }
        if (w >= 2) {
            opts.push_back(Gen::OmegaPlus);
            opts.push_back(Gen::OmegaMinus);
        }
        if (opts.empty()) break;
        Gen g = opts[rng.below(static_cast<int>(opts.size()))];
        if (arity_out(g) == 0 && static_cast<int>(t.slices.size()) + w >= max_slices) continue;
        if (is_antipode(g)) ++antipodes;
        push(g);
        if (static_cast<int>(t.slices.size()) + w >= max_slices) break;
    }
    while (w > 0) {
        static const Gen closers[] = {Gen::Eps, Gen::ThetaPlus, Gen::ThetaMinus, Gen::OmegaPlus, Gen::OmegaMinus};
        Gen g = closers[rng.below(w >= 2 ? 5 : 3)];
        push(g);
    }
    t.check();
    return t;
}

inline HopfDiagram random_diagram(Rng& rng, int n, int max_slices, int max_antipodes = 0) {
    return HopfDiagram(random_term(rng, n, max_slices, max_antipodes, std::max(4, n + 1)));
}

}  // namespace hopfdiag
