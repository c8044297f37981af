#pragma once

#include "graph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hopfdiag {

// A rule rewrites (antipode on input `leg` of `consumer`) into `rhs`, a
// fragment with the consumer's arity.
struct RewriteRule {
    std::string name;
    Gen antipode;
    Gen consumer;
    int leg;
    BraidedTerm rhs;
};

struct RuleSet {
    std::vector<RewriteRule> rules;

    const RewriteRule* find(Gen a, Gen c, int leg) const {
        for (const auto& r : rules)
            if (r.antipode == a && r.consumer == c && r.leg == leg) return &r;
        return nullptr;
    }
};

inline RuleSet antipode_rules() {
    auto T = [](int dom, std::vector<Slice> s) { return BraidedTerm(dom, std::move(s)); };
    RuleSet rs;
    auto add = [&](std::string name, Gen a, Gen c, int leg, BraidedTerm rhs) {
        rs.rules.push_back({std::move(name), a, c, leg, std::move(rhs)});
    };
    for (Gen a : {Gen::S, Gen::Sinv}) {
        const bool pos = a == Gen::S;
        const std::string an = pos ? "S" : "Sinv";
        const Gen braid = pos ? Gen::BraidPlus : Gen::BraidMinus;
        add("delta-" + an, a, Gen::Delta, 0, T(1, {{0, Gen::Delta, 0}, {0, braid, 0}, {0, a, 1}, {1, a, 0}}));
        add("eps-" + an, a, Gen::Eps, 0, T(1, {{0, Gen::Eps, 0}}));
        add("cancel-" + an, a, pos ? Gen::Sinv : Gen::S, 0, T(1, {}));
        add("theta+-" + an, a, Gen::ThetaPlus, 0, T(1, {{0, Gen::ThetaPlus, 0}}));
        add("theta--" + an, a, Gen::ThetaMinus, 0, T(1, {{0, Gen::ThetaMinus, 0}}));
        for (int leg : {0, 1}) {
            const std::string ln = leg == 0 ? "L" : "R";
            add("omega+-" + an + ln, a, Gen::OmegaPlus, leg,
                pos ? T(2, {{0, Gen::OmegaMinus, 0}}) : T(2, {{0, Gen::BraidPlus, 0}, {0, Gen::OmegaMinus, 0}}));
            add("omega--" + an + ln, a, Gen::OmegaMinus, leg,
                pos ? T(2, {{0, Gen::BraidMinus, 0}, {0, Gen::OmegaPlus, 0}}) : T(2, {{0, Gen::OmegaPlus, 0}}));
            for (Gen x : {Gen::BraidPlus, Gen::BraidMinus}) {
                // naturality: the antipode reappears on the opposite output of the crossing
                add(std::string("slide-") + gen_name(x) + "-" + an + ln, a, x, leg,
                    T(2, {{0, x, 0}, leg == 0 ? Slice{1, a, 0} : Slice{0, a, 1}}));
            }
        }
    }
    return rs;
}

// Rule set with one right-hand side perturbed; used as a negative control.
inline RuleSet corrupted_antipode_rules() {
    RuleSet rs = antipode_rules();
    for (auto& r : rs.rules)
        if (r.antipode == Gen::S && r.consumer == Gen::OmegaPlus && r.leg == 0) r.rhs = BraidedTerm(2, {{0, Gen::OmegaPlus, 0}});
    return rs;
}

struct Redex {
    int antipode_node;
    int consumer_node;
    const RewriteRule* rule;
};

inline std::vector<Redex> find_redexes(const DGraph& g, const RuleSet& rs) {
    const auto ix = g.index();
    std::vector<Redex> out;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const auto& n = g.nodes[k];
        if (!n.alive || !is_antipode(n.gen)) continue;
        int w = n.out[0];
        int c = ix.consumer[w];
        if (c < 0) continue;
        const RewriteRule* r = rs.find(n.gen, g.nodes[c].gen, ix.leg[w]);
        if (r) out.push_back({static_cast<int>(k), c, r});
    }
    return out;
}

inline void apply_redex(DGraph& g, const Redex& rx) {
    auto& s = g.nodes[rx.antipode_node];
    auto& c = g.nodes[rx.consumer_node];
    std::vector<int> ins = c.in;
    ins[rx.rule->leg] = s.in[0];
    std::vector<int> outs = c.out;
    s.alive = false;
    c.alive = false;
    g.splice(rx.rule->rhs, ins, outs);
}

struct EliminationReport {
    BraidedTerm term;
    std::size_t steps = 0;
    std::size_t residual = 0;  // antipodes left (only possible when cod > 0)
};

// Rewrites until no rule applies, always firing the lowest redex (in
// interchange order) first.
inline EliminationReport eliminate_antipodes_report(const BraidedTerm& t, const RuleSet& rs = antipode_rules(),
                                                    std::size_t max_steps = 1000000) {
    EliminationReport rep;
    t.check();
    if (t.antipode_count() == 0) {
        rep.term = t;
        return rep;
    }
    DGraph g = DGraph::from_term(t);
    for (;;) {
        auto rxs = find_redexes(g, rs);
        if (rxs.empty()) break;
        if (++rep.steps > max_steps) throw std::runtime_error("antipode elimination exceeded step limit");
        std::vector<int> order;
        g.to_term(&order);
        std::vector<int> rank(g.nodes.size(), 0);
        for (std::size_t q = 0; q < order.size(); ++q) rank[order[q]] = static_cast<int>(q);
        const Redex* best = &rxs[0];
        for (const auto& r : rxs)
            if (rank[r.antipode_node] < rank[best->antipode_node]) best = &r;
        apply_redex(g, *best);
    }
    rep.term = rep.steps == 0 ? t : g.to_term();
    rep.residual = rep.term.antipode_count();
    return rep;
}

inline BraidedTerm eliminate_antipodes(const BraidedTerm& t) { return eliminate_antipodes_report(t).term; }

namespace detail {

// tau^{-+1} directly on top of tau^{+-1}
inline bool cancel_braid_pair(DGraph& g) {
    const auto ix = g.index();
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        auto& a = g.nodes[k];
        if (!a.alive || !is_braid(a.gen)) continue;
        int c0 = ix.consumer[a.out[0]], c1 = ix.consumer[a.out[1]];
        if (c0 < 0 || c0 != c1 || ix.leg[a.out[0]] != 0 || ix.leg[a.out[1]] != 1) continue;
        auto& b = g.nodes[c0];
        if (!is_braid(b.gen) || b.gen == a.gen) continue;
        std::vector<int> ins = a.in, outs = b.out;
        a.alive = b.alive = false;
        g.splice(BraidedTerm(2), ins, outs);
        return true;
    }
    return false;
}

// (eps (x) id) Delta = id = (id (x) eps) Delta
inline bool apply_counit(DGraph& g) {
    const auto ix = g.index();
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        auto& d = g.nodes[k];
        if (!d.alive || d.gen != Gen::Delta) continue;
        for (int leg : {0, 1}) {
            int c = ix.consumer[d.out[leg]];
            if (c < 0 || g.nodes[c].gen != Gen::Eps) continue;
            int keep = d.out[1 - leg], in = d.in[0];
            d.alive = false;
            g.nodes[c].alive = false;
            g.redirect(keep, in);
            return true;
        }
    }
    return false;
}

// eps on a braiding output slides to the matching input: (eps (x) id) c = id (x) eps
inline bool apply_counit_braid(DGraph& g) {
    const auto ix = g.index();
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        auto& a = g.nodes[k];
        if (!a.alive || !is_braid(a.gen)) continue;
        for (int leg : {0, 1}) {
            int c = ix.consumer[a.out[leg]];
            if (c < 0 || g.nodes[c].gen != Gen::Eps) continue;
            const int keep = a.out[1 - leg], through = a.in[leg], eaten = a.in[1 - leg];
            a.alive = false;
            g.nodes[c].in = {eaten};
            g.redirect(keep, through);
            return true;
        }
    }
    return false;
}

// (id (x) Delta) Delta -> (Delta (x) id) Delta
inline bool apply_coassoc(DGraph& g) {
    const auto ix = g.index();
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        auto& a = g.nodes[k];
        if (!a.alive || a.gen != Gen::Delta) continue;
        int b_id = ix.consumer[a.out[1]];
        if (b_id < 0 || g.nodes[b_id].gen != Gen::Delta) continue;
        auto& b = g.nodes[b_id];
        int x = a.out[0], y1 = b.out[0], y2 = b.out[1], y = a.out[1];
        // a: in -> (y, y2); b: y -> (x, y1)
        a.out = {y, y2};
        b.in = {y};
        b.out = {x, y1};
        return true;
    }
    return false;
}

}  // namespace detail

// Antipode elimination, then counit (also through braidings), coassociativity (left combs), braid
// cancellation and the interchange normal form, to a fixpoint.
inline BraidedTerm canonicalize(const BraidedTerm& t) {
    BraidedTerm e = eliminate_antipodes(t);
    DGraph g = DGraph::from_term(e);
    bool changed = true;
    while (changed) {
        changed = detail::apply_counit(g) || detail::apply_counit_braid(g) || detail::cancel_braid_pair(g) ||
                  detail::apply_coassoc(g);
    }
    return g.to_term();
}

inline HopfDiagram canonicalize(const HopfDiagram& d) { return HopfDiagram(canonicalize(d.term)); }

// Normal form used to decide joinability of critical pairs: rewriting, then
// braid cancellation and interchange order.
inline BraidedTerm join_form(const DGraph& g0, const RuleSet& rs) {
    BraidedTerm t = eliminate_antipodes_report(g0.to_term(), rs).term;
    DGraph g = DGraph::from_term(t);
    while (detail::cancel_braid_pair(g)) {}
    return g.to_term();
}

struct ConfluenceReport {
    std::size_t terms_enumerated = 0;
    std::size_t pairs_checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_examples;
};

class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumerates every term with at most max_size slices (domain and widths at
// most max(max_size, 2)) and checks that each pair of redexes sharing a node
// rewrites to a common normal form.
inline ConfluenceReport local_confluence_report(int max_size, const RuleSet& rs = antipode_rules(),
                                                std::size_t node_budget = 50000000) {
    ConfluenceReport rep;
    if (max_size < 2) return rep;
    const int max_width = std::max(max_size, 2);
    std::size_t nodes_visited = 0;
    std::vector<Slice> stack;

    auto check_term = [&](const BraidedTerm& t) {
        DGraph g = DGraph::from_term(t);
        auto rxs = find_redexes(g, rs);
        for (std::size_t a = 0; a < rxs.size(); ++a)
            for (std::size_t b = a + 1; b < rxs.size(); ++b) {
                const Redex &x = rxs[a], &y = rxs[b];
                bool overlap = x.consumer_node == y.consumer_node || x.consumer_node == y.antipode_node ||
                               y.consumer_node == x.antipode_node;
                if (!overlap) continue;
                ++rep.pairs_checked;
                DGraph gx = g, gy = g;
                apply_redex(gx, x);
                apply_redex(gy, y);
                if (join_form(gx, rs) != join_form(gy, rs)) {
                    ++rep.failures;
                    if (rep.failure_examples.size() < 5)
                        rep.failure_examples.push_back(x.rule->name + " / " + y.rule->name + " on\n" + term_to_string(t));
                }
            }
    };

    std::function<void(int, int)> rec = [&](int dom, int width) {
        if (++nodes_visited > node_budget) throw resource_error("confluence search exceeded node budget");
        if (stack.size() >= 2) {
            ++rep.terms_enumerated;
            check_term(BraidedTerm(dom, stack));
        }
        if (static_cast<int>(stack.size()) == max_size) return;
        for (Gen gen : all_gens) {
            const int a = arity_in(gen), b = arity_out(gen);
            if (a > width || width - a + b > max_width) continue;
            for (int left = 0; left + a <= width; ++left) {
                stack.push_back(Slice{left, gen, width - left - a});
                rec(dom, width - a + b);
                stack.pop_back();
            }
        }
    };
    for (int dom = 0; dom <= max_width; ++dom) rec(dom, dom);
    return rep;
}

}  // namespace hopfdiag
