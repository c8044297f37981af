#pragma once

#include "bundle_io.hpp"
#include "invariant.hpp"
#include "random.hpp"
#include "rewrite.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hopfdiag {

struct AcceptanceOptions {
    std::string fixtures_dir;
    std::string filter;                      // substring of the slug, or the criterion number
    std::uint64_t seed = 20240601;
    std::vector<CoendBundle> extra_bundles;  // must validate too (criterion 10)
};

struct CriterionOutcome {
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string slug;
    bool pass = false;
    double seconds = 0;
    double budget = 0;
    std::string detail;
};

namespace acceptance {

struct Context {
    const AcceptanceOptions& opt;
    std::vector<CoendBundle> bundles;
    RibbonData jones;

    std::string fixture(const std::string& name) const { return opt.fixtures_dir + "/" + name; }
    TangleWord tangle(const std::string& name) const {
        std::ifstream in(fixture(name));
        if (!in) throw std::runtime_error("cannot open fixture " + fixture(name));
        return parse_tangle(in, name);
    }
    bool eval_equal(const BraidedTerm& a, const BraidedTerm& b) const {
        for (const auto& B : bundles)
            if (eval_term(a, B) != eval_term(b, B)) return false;
        return true;
    }
};

inline std::string counts(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        os << (first ? "" : " ") << k << "=" << v;
        first = false;
    }
    return os.str();
}

inline CriterionOutcome rewriting(Context& c) {
    Rng rng(c.opt.seed);
    std::size_t terms = 0, steps = 0, bad = 0;
    std::string first;
    for (int it = 0; it < 1000; ++it) {
        const BraidedTerm t = random_term(rng, rng.range(1, 3), 15, 5);
        const EliminationReport r = eliminate_antipodes_report(t);
        ++terms;
        steps += r.steps;
        if (r.term.antipode_count() != 0 || !c.eval_equal(t, r.term)) {
            if (!bad++) first = " first=#" + std::to_string(it);
        }
    }
    return {bad == 0, counts({{"terms", terms}, {"steps", steps}, {"failures", bad}}) + first};
}

inline CriterionOutcome confluence(Context&) {
    const ConfluenceReport r = local_confluence_report(3);
    std::string d = counts({{"terms", r.terms_enumerated}, {"pairs", r.pairs_checked}, {"failures", r.failures}});
    if (!r.failure_examples.empty()) d += " first: " + r.failure_examples.front();
    return {r.failures == 0 && r.pairs_checked > 0, d};
}

inline CriterionOutcome convolution(Context& c) {
    Rng rng(c.opt.seed + 3);
    std::size_t checks = 0, bad = 0;
    for (const auto& B : c.bundles)
        for (int it = 0; it < 200; ++it) {
            const int n = rng.range(1, 2);
            const HopfDiagram x = random_diagram(rng, n, 6, 1), y = random_diagram(rng, n, 6, 1),
                              z = random_diagram(rng, n, 6, 1);
            const HopfDiagram u = conv_identity(n);
            const Mat ex = eval_term(x.term, B);
            checks += 3;
            if (eval_term(conv_compose(conv_compose(x, y), z).term, B) != eval_term(conv_compose(x, conv_compose(y, z)).term, B)) ++bad;
            if (eval_term(conv_compose(x, u).term, B) != ex) ++bad;
            if (eval_term(conv_compose(u, x).term, B) != ex) ++bad;
        }
    return {bad == 0, counts({{"triples", 200 * c.bundles.size()}, {"checks", checks}, {"failures", bad}})};
}

// Convolution products are compared through their canonical forms, which
// evaluate like the raw terms (criterion 1) and stay narrow.
inline CriterionOutcome bar_relations_check(Context& c) {
    std::size_t checks = 0;
    std::string failed;
    for (const auto& r : bar_relations()) {
        ++checks;
        if (!c.eval_equal(canonicalize(r.lhs), canonicalize(r.rhs))) failed += " " + r.name;
    }
    return {failed.empty(), counts({{"relations", checks}}) + (failed.empty() ? "" : " failed:" + failed)};
}

inline std::string compact(const PureBraidWord& P) {
    std::string s;
    for (const auto& l : P.letters) {
        s += s.empty() ? "" : ".";
        s += l.twist ? "t" + std::to_string(l.i) : "s" + std::to_string(l.i) + "," + std::to_string(l.j);
        s += l.sign > 0 ? "+" : "-";
    }
    return s.empty() ? "1" : s;
}

struct WordRelation {
    std::string name;
    PureBraidWord lhs, rhs;
};

// Instances of the defining relations of the pure ribbon braid group on n
// strands. Commuting sigma pairs are the disjoint and the nested ones.
inline std::vector<WordRelation> markov_instances(int n) {
    using L = PureLetter;
    std::vector<WordRelation> out;
    auto add = [&](std::string name, std::vector<PureLetter> a, std::vector<PureLetter> b) {
        out.push_back({std::move(name), PureBraidWord{n, std::move(a)}, PureBraidWord{n, std::move(b)}});
    };
    std::vector<L> sig;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) sig.push_back(L::sigma(i, j));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            for (int s : {1, -1}) add("t-t", {L::t(k), L::t(l, s)}, {L::t(l, s), L::t(k)});
    for (int k = 1; k <= n; ++k)
        for (const auto& x : sig)
            for (int s : {1, -1}) add("t-sigma", {L::t(k), L::sigma(x.i, x.j, s)}, {L::sigma(x.i, x.j, s), L::t(k)});
    for (const auto& x : sig)
        for (const auto& y : sig) {
            const bool disjoint = x.j < y.i, nested = x.i < y.i && y.j < x.j;
            if (!disjoint && !nested) continue;
            for (int s : {1, -1})
                add(disjoint ? "commute-disjoint" : "commute-nested", {x, L::sigma(y.i, y.j, s)}, {L::sigma(y.i, y.j, s), x});
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const L ij = L::sigma(i, j), ik = L::sigma(i, k), jk = L::sigma(j, k);
                add("triangle-a", {ij, ik, jk}, {ik, jk, ij});
                add("triangle-b", {ik, jk, ij}, {jk, ij, ik});
                for (int l = k + 1; l <= n; ++l) {
                    const L jl = L::sigma(j, l), jk_inv = L::sigma(j, k, -1);
                    add("conjugation", {ik, jk, jl, jk_inv}, {jk, jl, jk_inv, ik});
                }
            }
    return out;
}

inline CriterionOutcome markov(Context& c) {
    std::size_t checks = 0;
    std::string failed;
    for (int n = 1; n <= 5; ++n)
        for (const auto& r : markov_instances(n)) {
            ++checks;
            if (!c.eval_equal(canonicalize(psi0(r.lhs).term), canonicalize(psi0(r.rhs).term)) && failed.size() < 200)
                failed += " " + r.name + "[" + compact(r.lhs) + "]";
        }
    return {failed.empty(), counts({{"instances", checks}}) + (failed.empty() ? "" : " failed:" + failed)};
}

inline PureBraidWord random_pure(Rng& rng, int n, int len) {
    PureBraidWord P{n, {}};
    for (int q = 0; q < len; ++q) {
        const int s = rng.coin() ? 1 : -1;
        if (n == 1 || rng.below(4) == 0) {
            P.letters.push_back(PureLetter::t(rng.range(1, n), s));
        } else {
            const int i = rng.range(1, n - 1);
            P.letters.push_back(PureLetter::sigma(i, rng.range(i + 1, n), s));
        }
    }
    return P;
}

// Tangle equality as seen by the Jones oracle and the zmod2 test module.
inline bool oracle_equal(Context& c, const TangleWord& a, const TangleWord& b) {
    if (eval_tangle_oracle(a, c.jones) != eval_tangle_oracle(b, c.jones)) return false;
    return eval_tangle_oracle(a, c.bundles.at(1)) == eval_tangle_oracle(b, c.bundles.at(1));
}

inline CriterionOutcome contraction(Context& c) {
    Rng rng(c.opt.seed + 6);
    std::size_t pres = 0, diag = 0, psi = 0, bad = 0;
    std::string first;
    auto fail = [&](const std::string& what) {
        if (!bad++) first = " first: " + what;
    };
    // c_i c_j = c_j c_{i+2} for i >= j, on presentations
    for (int n = 5; n <= 7; ++n)
        for (int j = 2; j <= n - 3; ++j)
            for (int i = j; i <= n - 3; ++i)
                for (int rep = 0; rep < 3; ++rep) {
                    const PureBraidWord P = random_pure(rng, n, 3);
                    StringLinkPresentation a = presentation_of(P), b = a;
                    a = contract_presentation(contract_presentation(a, j), i);
                    b = contract_presentation(contract_presentation(b, i + 2), j);
                    const TangleWord ta = presentation_to_tangle(a), tb = presentation_to_tangle(b);
                    ++pres;
                    if (closure_linking(ta).linking_matrix != closure_linking(tb).linking_matrix || !oracle_equal(c, ta, tb))
                        fail("c_" + std::to_string(i) + "c_" + std::to_string(j) + " on " + compact(P));
                }
    // C_i C_j = C_j C_{i+2} under evaluation
    for (int n = 5; n <= 7; ++n)
        for (int j = 2; j <= n - 3; ++j)
            for (int i = j; i <= n - 3; ++i)
                for (int rep = 0; rep < 3; ++rep) {
                    const HopfDiagram D = random_diagram(rng, n, n + 4, 1);
                    ++diag;
                    if (!c.eval_equal(contract_C(contract_C(D, j), i).term, contract_C(contract_C(D, i + 2), j).term))
                        fail("C_" + std::to_string(i) + "C_" + std::to_string(j) + " n=" + std::to_string(n));
                }
    // c_i(psi(D)) = psi(C_i(D))
    for (int k = 0; k < 100; ++k) {
        const int n = 3 + k % 2;
        const HopfDiagram D = random_diagram(rng, n, 7, 1);
        const int i = 2 + rng.below(n - 2);
        ++psi;
        if (!oracle_equal(c, contraction_word(psi_geom(D), i), psi_geom(contract_C(D, i))))
            fail("c_" + std::to_string(i) + " psi on diagram #" + std::to_string(k));
    }
    return {bad == 0, counts({{"presentation", pres}, {"evaluation", diag}, {"oracle", psi}, {"failures", bad}}) + first};
}

struct CorpusEntry {
    std::string name;
    StringLinkPresentation T;
};

// Pure braids, contracted braids, doubled components and the trefoil.
inline std::vector<CorpusEntry> string_link_corpus(Context& c, Rng& rng) {
    std::vector<CorpusEntry> out;
    auto twists = [&](int n) {
        std::vector<int> t(n);
        for (auto& x : t) x = rng.range(-1, 1);
        return t;
    };
    for (int k = 0; k < 20; ++k) {
        const int n = 1 + k % 3;
        StringLinkPresentation T = presentation_of(random_pure(rng, n, 1 + rng.below(3)));
        if (k % 4 == 3) T.twists = twists(n);
        out.push_back({"pure-" + std::to_string(k), T});
    }
    for (int k = 0; k < 16; ++k) {
        const int n = 3 + k % 3;
        StringLinkPresentation T = presentation_of(random_pure(rng, n, 2));
        T = contract_presentation(T, 2 + rng.below(n - 2));
        if (n == 5 && k % 2 == 0) T = contract_presentation(T, 2);
        T.twists = twists(T.n());
        out.push_back({"contracted-" + std::to_string(k), T});
    }
    for (int k = 0; k < 14; ++k) {
        const int n = 1 + k % 2;
        const PureBraidWord P = random_pure(rng, n, 1 + rng.below(2));
        StringLinkPresentation T = presentation_of(double_strand(P, 1 + rng.below(n)));
        if (k % 3 == 0) T.twists = twists(T.n());
        out.push_back({"doubled-" + std::to_string(k), T});
    }
    out.push_back({"trefoil", extract_presentation(c.tangle("trefoil_plus1.tangle"))});
    return out;
}

inline CriterionOutcome retraction(Context& c) {
    Rng rng(c.opt.seed + 7);
    const auto corpus = string_link_corpus(c, rng);
    std::size_t checks = 0, bad = 0;
    std::string first;
    for (const auto& e : corpus) {
        const TangleWord T = presentation_to_tangle(e.T);
        const HopfDiagram D = psi_full(e.T), C = canonicalize(D);
        for (const auto& B : c.bundles) {
            ++checks;
            if (eval_term(D.term, B) != eval_term(C.term, B) && !bad++) first = " first: canonical form of " + e.name;
            for (std::size_t mi = 0; mi < B.modules.size(); ++mi) {
                checks += 2;
                // the handle of the canonical form keeps the oracle narrow
                if (!check_factorization(C, B, mi) || !check_retraction(T, D, B, mi))
                    if (!bad++) first = " first: " + e.name + " on " + B.name;
            }
        }
    }
    return {bad == 0 && corpus.size() >= 50, counts({{"string_links", corpus.size()}, {"checks", checks}, {"failures", bad}}) + first};
}

inline TangleWord framed_unknot(int f) {
    TangleWord w{1, {}};
    for (int k = 0; k < std::abs(f); ++k) {
        const auto e = curl_events(1, f > 0 ? 1 : -1);
        w.events.insert(w.events.end(), e.begin(), e.end());
    }
    return w;
}

inline CriterionOutcome poincare(Context& c) {
    const TangleWord tre = c.tangle("trefoil_plus1.tangle");
    // (omega_+ Delta (x) theta_-) Delta
    const HopfDiagram D(BraidedTerm(
        1, {Slice{0, Gen::Delta, 0}, Slice{0, Gen::Delta, 1}, Slice{0, Gen::OmegaPlus, 1}, Slice{0, Gen::ThetaMinus, 0}}));
    std::size_t checks = 0, skipped = 0, bad = 0;
    std::string first;
    for (const auto& B : c.bundles)
        for (const auto& an : named_alphas()) {
            const Mat a = named_alpha(an, B);
            const KirbyCandidate k = kirby_check(a, B);
            if (!k.kirby_ok) continue;
            if (!k.normalizable) {
                ++skipped;
                continue;
            }
            const TauResult t = invariant_tau(tre, a, B);
            const Scalar hand = k.theta_plus.pow(-1) * contract_alpha(D, a, B);
            ++checks;
            const bool ok = t.link.n_L == 1 && t.link.b_minus == 0 && t.tau == hand && (B.name != "trivial" || t.tau == Scalar(1));
            if (!ok && !bad++) first = " first: " + B.name + "/" + an + " tau=" + t.tau.str() + " hand=" + hand.str();
        }
    return {bad == 0 && checks > 0,
            counts({{"checks", checks}, {"not_normalizable", skipped}, {"failures", bad}}) + first};
}

inline CriterionOutcome normalization(Context& c) {
    std::size_t checks = 0, bad = 0;
    std::string first;
    for (const auto& B : c.bundles)
        for (const auto& an : named_alphas()) {
            const Mat a = named_alpha(an, B);
            if (!kirby_check(a, B).normalizable) continue;
            for (const auto& [label, w] : {std::pair<std::string, TangleWord>{"empty", TangleWord{0, {}}},
                                           {"unknot+1", framed_unknot(1)}, {"unknot-1", framed_unknot(-1)}}) {
                ++checks;
                const Scalar t = invariant_tau(w, a, B).tau;
                if (t != Scalar(1) && !bad++) first = " first: " + B.name + "/" + an + " " + label + " tau=" + t.str();
            }
        }
    return {bad == 0, counts({{"checks", checks}, {"failures", bad}}) + first};
}

inline const std::vector<std::string>& corrupted_axioms() {
    static const std::vector<std::string> a = {"counit", "associativity", "braiding-inverse", "antipode", "module-snake"};
    return a;
}

inline CriterionOutcome bundle_axioms(Context& c) {
    std::string failed;
    std::size_t checks = 0;
    for (const auto& B : c.bundles) {
        ++checks;
        const ValidationReport r = bundle_validate(B);
        if (!r.ok()) failed += " " + B.name + "(" + r.failures.front() + ")";
    }
    for (const auto& B : c.opt.extra_bundles) {
        ++checks;
        const ValidationReport r = bundle_validate(B);
        if (!r.ok()) failed += " " + B.name + "(" + r.failures.front() + ")";
    }
    for (const auto& ax : corrupted_axioms()) {
        ++checks;
        const ValidationReport r = bundle_validate(load_bundle_file(c.fixture("bundles/corrupt_" + ax + ".json")));
        const std::string got = r.ok() ? "none" : r.failures.front();
        if (got != ax) failed += " corrupt_" + ax + "(reported " + got + ")";
    }
    return {failed.empty(), counts({{"bundles", checks}}) + (failed.empty() ? "" : " failed:" + failed)};
}

inline CriterionOutcome gauss_sums(Context& c) {
    std::size_t checks = 0, bad = 0;
    std::string first;
    for (const std::string name : {"zmod2", "zmod3", "zmod4"}) {
        const auto it = std::find_if(c.bundles.begin(), c.bundles.end(), [&](const CoendBundle& b) { return b.name == name; });
        if (it == c.bundles.end()) throw std::runtime_error("missing built-in bundle " + name);
        const CoendBundle& B = *it;
        const Mat a = named_alpha("uniform", B);
        for (int f = -3; f <= 3; ++f) {
            ++checks;
            const Scalar t = invariant_tau(framed_unknot(f), a, B).tau, g = gauss_sum_tau(builtin_params(name), f);
            if (t != g && !bad++) first = " first: " + name + " f=" + std::to_string(f) + " tau=" + t.str() + " sum=" + g.str();
        }
    }
    return {bad == 0, counts({{"checks", checks}, {"failures", bad}}) + first};
}

struct Criterion {
    int id;
    std::string slug;
    double budget;
    CriterionOutcome (*run)(Context&);
};

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> cs = {
        {1, "rewriting", 30, rewriting},       {2, "confluence", 60, confluence},
        {3, "convolution", 30, convolution},   {4, "bar-relations", 10, bar_relations_check},
        {5, "markov", 60, markov},             {6, "contraction", 60, contraction},
        {7, "retraction", 120, retraction},    {8, "poincare", 10, poincare},
        {9, "normalization", 5, normalization}, {10, "bundle-axioms", 30, bundle_axioms},
        {11, "gauss-sums", 10, gauss_sums},
    };
    return cs;
}

inline bool selected(const Criterion& c, const std::string& filter) {
    if (filter.empty()) return true;
    return filter == std::to_string(c.id) || c.slug.find(filter) != std::string::npos;
}

}  // namespace acceptance

inline std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << ' ' << std::setw(2) << r.id << ' ' << std::left << std::setw(14) << r.slug
       << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s / " << std::setprecision(0)
       << r.budget << "s  " << r.detail;
    return os.str();
}

// Runs the selected criteria in order; a criterion over its time budget
// fails. Each result is printed to out as soon as it is known.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream* out = nullptr) {
    acceptance::Context ctx{opt, {}, derive_ribbon(jones_module(5))};
    for (const auto& n : builtin_bundle_names()) ctx.bundles.push_back(builtin_bundle(n));
    std::vector<CriterionResult> results;
    for (const auto& c : acceptance::criteria()) {
        if (!acceptance::selected(c, opt.filter)) continue;
        CriterionResult r{c.id, c.slug, false, 0, c.budget, ""};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const CriterionOutcome o = c.run(ctx);
            r.pass = o.pass;
            r.detail = o.detail;
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.budget) {
            r.pass = false;
            r.detail += " (over budget)";
        }
        if (out) *out << format_result(r) << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace hopfdiag
