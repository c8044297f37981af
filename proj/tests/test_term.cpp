#include <catch_amalgamated.hpp>

#include "hopfdiag/abelian.hpp"
#include "hopfdiag/validate.hpp"

using namespace hopfdiag;

namespace {
std::vector<CoendBundle> raw_builtins() {
    std::vector<CoendBundle> r;
    for (const auto& n : builtin_bundle_names()) r.push_back(make_abelian_bundle(builtin_params(n), n));
    return r;
}
}  // namespace

TEST_CASE("compose and tensor bookkeeping", "[term]") {
    BraidedTerm t = term_compose(gen_term(Gen::S), gen_term(Gen::Delta));
    CHECK(t.dom == 1);
    CHECK(t.cod() == 2);
    CHECK_THROWS_AS(term_compose(gen_term(Gen::Delta), gen_term(Gen::S)), term_error);
    BraidedTerm x = term_tensor(gen_term(Gen::ThetaPlus), gen_term(Gen::Delta));
    CHECK(x.dom == 2);
    CHECK(x.cod() == 2);
    CHECK(term_compose(identity_term(3), conv_identity(3).term) == conv_identity(3).term);
    CHECK(term_tensor(identity_term(0), x) == x);
    BraidedTerm ee = term_tensor(gen_term(Gen::Eps), gen_term(Gen::Eps));
    CHECK(ee.dom == 2);
    CHECK(ee.cod() == 0);
}

TEST_CASE("delta powers and convolution identity", "[term]") {
    CHECK(delta_power(0) == identity_term(1));
    CHECK(delta_power(1) == gen_term(Gen::Delta));
    BraidedTerm d2 = delta_power(2);
    CHECK(d2 == BraidedTerm(1, {Slice{0, Gen::Delta, 0}, Slice{0, Gen::Delta, 1}}));
    CHECK(d2.cod() == 3);
    CHECK(conv_identity(0).term.slices.empty());
    CHECK(conv_identity(1).term == gen_term(Gen::Eps));
    CHECK(conv_identity(3).term.count(Gen::Eps) == 3);
}

TEST_CASE("text format round trip and errors", "[term]") {
    BraidedTerm t = term_compose(coproduct_n(2), term_tensor(sigma_diagram(1, 2, 2, 1).term, conv_identity(2).term));
    CHECK(parse_term(term_to_string(t)) == t);
    try {
        parse_term("hd n=1\n0 delta 0\n0 eps 0\n");
        FAIL("expected parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_term("0 eps 0\n"), parse_error);
    CHECK_THROWS_AS(parse_term("hd n=1\n0 foo 0\n"), parse_error);
}

TEST_CASE("built-in bundles satisfy the algebra axioms", "[eval]") {
    for (const auto& b : raw_builtins()) {
        ValidationReport r;
        REQUIRE(check_shapes(b, r));
        validate_algebra(b, r);
        INFO(b.name);
        for (const auto& f : r.failures) INFO(f);
        CHECK(r.ok());
    }
}

TEST_CASE("evaluation of simple diagrams", "[eval]") {
    for (const auto& b : raw_builtins()) {
        CHECK(eval_term(conv_identity(2).term, b) == kron(b.eps, b.eps));
        CHECK(eval_term(gen_term(Gen::Delta), b) == b.delta);
        CHECK(eval_term(delta_power(2), b) == kron(b.delta, Mat::identity(b.d)) * b.delta);
        BraidedTerm t = term_compose(gen_term(Gen::Delta), term_tensor(gen_term(Gen::S), gen_term(Gen::ThetaPlus)));
        CHECK(eval_term(t, b) == kron(b.S, b.theta_plus) * b.delta);
        // the contraction order must not matter for a term with a long pass-through
        BraidedTerm p = term_tensor(identity_term(2), gen_term(Gen::BraidPlus));
        CHECK(eval_term(p, b) == kron(Mat::identity(b.d * b.d), b.c));
    }
}

TEST_CASE("convolution unit and associativity under evaluation", "[eval]") {
    for (const auto& b : raw_builtins()) {
        HopfDiagram A = sigma_diagram(1, 2, 2, 1), B = omega_diagram(2, 2, -1), C = sigma_diagram(1, 2, 2, -1);
        CHECK(eval_term(conv_compose(A, conv_identity(2)).term, b) == eval_term(A.term, b));
        CHECK(eval_term(conv_compose(conv_identity(2), A).term, b) == eval_term(A.term, b));
        CHECK(eval_term(conv_compose(conv_compose(A, B), C).term, b) == eval_term(conv_compose(A, conv_compose(B, C)).term, b));
    }
}
