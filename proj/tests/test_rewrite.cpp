#include <catch_amalgamated.hpp>

#include "hopfdiag/abelian.hpp"
#include "hopfdiag/eval.hpp"
#include "hopfdiag/random.hpp"
#include "hopfdiag/rewrite.hpp"

using namespace hopfdiag;

namespace {
const std::vector<CoendBundle>& bundles() {
    static const std::vector<CoendBundle> r = [] {
        std::vector<CoendBundle> v;
        for (const auto& n : builtin_bundle_names()) v.push_back(make_abelian_bundle(builtin_params(n), n));
        return v;
    }();
    return r;
}

BraidedTerm T(int dom, std::vector<Slice> s) { return BraidedTerm(dom, std::move(s)); }
}  // namespace

TEST_CASE("antipode rules on small terms", "[rewrite]") {
    CHECK(eliminate_antipodes(T(1, {{0, Gen::S, 0}, {0, Gen::ThetaPlus, 0}})) == gen_term(Gen::ThetaPlus));
    CHECK(eliminate_antipodes(T(1, {{0, Gen::Sinv, 0}, {0, Gen::ThetaMinus, 0}})) == gen_term(Gen::ThetaMinus));
    CHECK(eliminate_antipodes(T(2, {{0, Gen::S, 1}, {0, Gen::OmegaPlus, 0}})) == gen_term(Gen::OmegaMinus));
    CHECK(eliminate_antipodes(T(2, {{1, Gen::S, 0}, {0, Gen::OmegaPlus, 0}})) == gen_term(Gen::OmegaMinus));
    CHECK(eliminate_antipodes(T(1, {{0, Gen::Sinv, 0}, {0, Gen::S, 0}, {0, Gen::Eps, 0}})) == gen_term(Gen::Eps));
    CHECK(eliminate_antipodes(T(1, {{0, Gen::S, 0}, {0, Gen::Sinv, 0}, {0, Gen::Eps, 0}})) == gen_term(Gen::Eps));
    CHECK(eliminate_antipodes(T(2, {{0, Gen::Sinv, 1}, {0, Gen::OmegaPlus, 0}})) ==
          T(2, {{0, Gen::BraidPlus, 0}, {0, Gen::OmegaMinus, 0}}));
    CHECK(eliminate_antipodes(T(2, {{0, Gen::S, 1}, {0, Gen::OmegaMinus, 0}})) ==
          T(2, {{0, Gen::BraidMinus, 0}, {0, Gen::OmegaPlus, 0}}));
}

TEST_CASE("antipode through a coproduct", "[rewrite]") {
    BraidedTerm t = T(1, {{0, Gen::S, 0}, {0, Gen::Delta, 0}, {0, Gen::ThetaPlus, 1}, {0, Gen::Eps, 0}});
    auto rep = eliminate_antipodes_report(t);
    CHECK(rep.term.antipode_count() == 0);
    CHECK(rep.residual == 0);
    for (const auto& b : bundles()) CHECK(eval_term(rep.term, b) == eval_term(t, b));
}

TEST_CASE("residual antipodes at the codomain are reported", "[rewrite]") {
    auto rep = eliminate_antipodes_report(T(1, {{0, Gen::S, 0}, {0, Gen::Delta, 0}}));
    CHECK(rep.residual == 2);
    CHECK(rep.term.cod() == 2);
    CHECK(rep.term.count(Gen::Delta) == 1);
    CHECK(eliminate_antipodes(T(1, {{0, Gen::S, 0}})) == T(1, {{0, Gen::S, 0}}));
}

TEST_CASE("S-free terms are untouched and elimination is idempotent", "[rewrite]") {
    Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        BraidedTerm t = random_term(rng, rng.range(1, 3), 12, 0);
        CHECK(eliminate_antipodes(t) == t);
        BraidedTerm u = random_term(rng, rng.range(1, 3), 12, 4);
        BraidedTerm e = eliminate_antipodes(u);
        CHECK(eliminate_antipodes(e) == e);
    }
}

TEST_CASE("elimination preserves evaluation", "[rewrite]") {
    Rng rng(5);
    for (int it = 0; it < 150; ++it) {
        BraidedTerm t = random_term(rng, rng.range(1, 3), 15, 5);
        BraidedTerm e = eliminate_antipodes(t);
        REQUIRE(e.antipode_count() == 0);
        for (const auto& b : bundles()) CHECK(eval_term(e, b) == eval_term(t, b));
    }
}

TEST_CASE("canonical forms", "[rewrite]") {
    CHECK(canonicalize(T(1, {{0, Gen::Delta, 0}, {0, Gen::Eps, 1}})) == identity_term(1));
    CHECK(canonicalize(T(1, {{0, Gen::Delta, 0}, {1, Gen::Eps, 0}})) == identity_term(1));
    CHECK(canonicalize(T(1, {{0, Gen::Delta, 0}, {1, Gen::Delta, 0}})) == delta_power(2));
    HopfDiagram d = conv_compose(HopfDiagram(gen_term(Gen::ThetaPlus)), conv_identity(1));
    CHECK(canonicalize(d.term) == gen_term(Gen::ThetaPlus));
    CHECK(canonicalize(T(2, {{0, Gen::BraidPlus, 0}, {0, Gen::BraidMinus, 0}})) == identity_term(2));
}

TEST_CASE("canonicalize is idempotent, sound and interchange invariant", "[rewrite]") {
    Rng rng(17);
    for (int it = 0; it < 150; ++it) {
        BraidedTerm t = random_term(rng, rng.range(1, 3), 14, 3);
        BraidedTerm c = canonicalize(t);
        CHECK(canonicalize(c) == c);
        for (const auto& b : bundles()) CHECK(eval_term(c, b) == eval_term(t, b));
        // swap two adjacent slices with disjoint support when possible
        BraidedTerm s = t;
        for (std::size_t k = 0; k + 1 < s.slices.size(); ++k) {
            Slice a = s.slices[k], b = s.slices[k + 1];
            if (b.left >= a.left + arity_out(a.gen)) {
                // b lies right of a's outputs: move b below a
                Slice b2{b.left - arity_out(a.gen) + arity_in(a.gen), b.gen, b.right};
                Slice a2{a.left, a.gen, a.right - arity_in(b.gen) + arity_out(b.gen)};
                s.slices[k] = b2;
                s.slices[k + 1] = a2;
                s.check();
                break;
            }
        }
        CHECK(canonicalize(s) == c);
    }
}

TEST_CASE("local confluence", "[rewrite][confluence]") {
    CHECK(local_confluence_report(1).pairs_checked == 0);
    auto r2 = local_confluence_report(2);
    CHECK(r2.failures == 0);
    auto r3 = local_confluence_report(3);
    CHECK(r3.pairs_checked > 0);
    CHECK(r3.terms_enumerated > r2.terms_enumerated);
    for (const auto& f : r3.failure_examples) INFO(f);
    CHECK(r3.failures == 0);
    CHECK(local_confluence_report(3, corrupted_antipode_rules()).failures > 0);
    CHECK_THROWS_AS(local_confluence_report(3, antipode_rules(), 100), resource_error);
}
