#include <catch_amalgamated.hpp>

#include "hopfdiag/invariant.hpp"
#include "hopfdiag/random.hpp"
#include "hopfdiag/rewrite.hpp"

#include <fstream>
#include <sstream>

using namespace hopfdiag;

namespace {

TangleWord fixture_tangle(const std::string& name) {
    std::ifstream in(std::string(HOPFDIAG_FIXTURES) + "/" + name);
    REQUIRE(in);
    return parse_tangle(in, name);
}

const std::vector<CoendBundle>& bundles() {
    static const std::vector<CoendBundle> bs = [] {
        std::vector<CoendBundle> r;
        for (const auto& n : builtin_bundle_names()) r.push_back(builtin_bundle(n));
        return r;
    }();
    return bs;
}

bool eval_equal(const HopfDiagram& a, const HopfDiagram& b) {
    for (const auto& B : bundles())
        if (eval_term(a.term, B) != eval_term(b.term, B)) return false;
    return true;
}

// (omega_+ Delta (x) theta_-) Delta
HopfDiagram trefoil_diagram() {
    return HopfDiagram(BraidedTerm(1, {Slice{0, Gen::Delta, 0}, Slice{0, Gen::Delta, 1}, Slice{0, Gen::OmegaPlus, 1},
                                       Slice{0, Gen::ThetaMinus, 0}}));
}

PureBraidWord random_word(Rng& rng, int n, int len) {
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

struct Jones {
    RibbonData R = derive_ribbon(jones_module(5));
    Mat operator()(const TangleWord& w) const { return eval_tangle_oracle(w, R); }
};

}  // namespace

TEST_CASE("derived ribbon data satisfies the tangle moves", "[ribbon]") {
    std::vector<RibbonModule> mods = {jones_module(5), jones_module(7)};
    for (const auto& B : bundles()) mods.push_back(B.modules[0].rib);
    for (const auto& m : mods) {
        INFO(m.name);
        const RibbonData R = derive_ribbon(m);
        const Mat I = Mat::identity(m.dim);
        auto E = [&](const std::string& s) { return eval_tangle_oracle(parse_tangle(s), R); };
        CHECK(E("tangle w=1\ncup 2\ncap 1\n") == I);
        CHECK(E("tangle w=1\ncup 1\ncap 2\n") == I);
        CHECK(E("tangle w=1\ncup 2\nx 1 +\ncap 2\n") == m.theta);
        CHECK(E("tangle w=1\ncup 2\nx 1 -\ncap 2\n") == m.theta_inv);
        CHECK(E("tangle w=1\ncup 1\nx 2 +\ncap 1\n") == m.theta);
        CHECK(E("tangle w=1\ncup 1\nx 2 -\ncap 1\n") == m.theta_inv);
        CHECK(E("tangle w=2\nx 1 +\nx 1 -\n") == Mat::identity(m.dim * m.dim));
        CHECK(E("tangle w=1\ncup 2\nx 1 +\nx 1 -\ncap 1\n") == I);
        CHECK(E("tangle w=3\nx 1 +\nx 2 +\nx 1 +\n") == E("tangle w=3\nx 2 +\nx 1 +\nx 2 +\n"));
        CHECK(E("tangle w=3\nx 2 +\nx 1 +\ncap 2\n") == E("tangle w=3\ncap 1\n"));
    }
    CHECK_THROWS_AS(jones_module(2), std::invalid_argument);
}

TEST_CASE("the Jones module gives the quantum dimension on the unknot", "[ribbon]") {
    for (int m : {5, 7}) {
        const RibbonData R = derive_ribbon(jones_module(m));
        const Mat u = eval_tangle_oracle(parse_tangle("tangle w=0\ncup 1\ncap 1\n"), R);
        CHECK(u(0, 0) == Scalar::zeta(m, 1) + Scalar::zeta(m, -1));
    }
}

TEST_CASE("generator images", "[translator]") {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(eval_equal(conv_compose(omega_diagram(k, n, 1), omega_diagram(k, n, -1)), conv_identity(n)));
            for (int j = k + 1; j <= n; ++j)
                CHECK(eval_equal(conv_compose(sigma_diagram(k, j, n, 1), sigma_diagram(k, j, n, -1)), conv_identity(n)));
        }
    CHECK(omega_diagram(1, 1, 1).term.slices == std::vector<Slice>{Slice{0, Gen::ThetaPlus, 0}});
    CHECK(sigma_diagram(1, 2, 2, 1).term.slices == std::vector<Slice>{Slice{0, Gen::OmegaPlus, 0}});
    CHECK_THROWS_AS(sigma_diagram(2, 2, 3, 1), term_error);
    CHECK_THROWS_AS(omega_diagram(4, 3, 1), term_error);
    CHECK(psi0(PureBraidWord{3, {}}).term == conv_identity(3).term);
    using L = PureLetter;
    CHECK(eval_equal(psi0({3, {L::t(1), L::t(3, -1)}}), psi0({3, {L::t(3, -1), L::t(1)}})));
    CHECK(eval_equal(psi0({3, {L::sigma(1, 2), L::sigma(1, 3), L::sigma(2, 3)}}),
                     psi0({3, {L::sigma(1, 3), L::sigma(2, 3), L::sigma(1, 2)}})));
}

TEST_CASE("phi builds handles that factorize through the coend", "[translator][oracle]") {
    for (int n = 0; n <= 3; ++n) {
        TangleWord id = phi(conv_identity(n));
        CHECK(id.events.size() == static_cast<std::size_t>(n));
        for (const auto& e : id.events) CHECK((e.kind == EventKind::Cap && e.pos == 1));
        CHECK_NOTHROW(validate_tangle(id, TangleMode::handle));
    }
    for (const auto& B : bundles()) {
        INFO(B.name);
        for (const auto& D : factorization_probes()) CHECK(check_factorization(D, B));
        Rng rng(7);
        for (int k = 0; k < 25; ++k) CHECK(check_factorization(random_diagram(rng, 1 + k % 3, 8, 2), B));
        CHECK(check_factorization(trefoil_diagram(), B));
    }
    // theta_+ closes to the +1-framed unknot, the trefoil diagram to the +1 trefoil
    CHECK(closure_linking(psi_geom(HopfDiagram(gen_term(Gen::ThetaPlus)))).linking_matrix ==
          std::vector<std::vector<long long>>{{1}});
    const TangleWord tre = fixture_tangle("trefoil_plus1.tangle");
    const TangleWord k = psi_geom(trefoil_diagram());
    CHECK(closure_linking(k).linking_matrix == std::vector<std::vector<long long>>{{1}});
    Jones J;
    CHECK(J(k) == J(tre));
}

TEST_CASE("psi_geom is G after phi and fixes the identity", "[translator]") {
    Jones J;
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        HopfDiagram D = random_diagram(rng, 1 + k % 3, 8, 1);
        CHECK(psi_geom(D) == convert_F_G(phi(D), FGDirection::to_string_link));
        CHECK(J(convert_F_G(psi_geom(D), FGDirection::to_handle)) == J(phi(D)));
    }
    for (int n = 0; n <= 3; ++n) {
        const TangleWord w = psi_geom(conv_identity(n));
        CHECK(w.bottom_width == n);
        CHECK(J(w) == J(TangleWord{n, {}}));
        CHECK(closure_linking(w).linking_matrix == closure_linking(TangleWord{n, {}}).linking_matrix);
    }
}

TEST_CASE("Psi0 agrees with the braid under the Jones oracle", "[translator][oracle]") {
    Jones J;
    Rng rng(5);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 12; ++k) {
            PureBraidWord P = random_word(rng, n, 1 + rng.below(3));
            INFO(braid_to_string(P));
            CHECK(J(braid_to_tangle(P)) == J(psi_geom(canonicalize(psi0(P)))));
        }
    // the letter order matters: sigma_{1,2} sigma_{2,3} and its reverse differ
    using L = PureLetter;
    PureBraidWord a{3, {L::sigma(1, 2), L::sigma(2, 3)}}, b{3, {L::sigma(2, 3), L::sigma(1, 2)}};
    CHECK(J(braid_to_tangle(a)) != J(braid_to_tangle(b)));
    CHECK(J(psi_geom(canonicalize(psi0(a)))) == J(braid_to_tangle(a)));
    CHECK(J(psi_geom(canonicalize(psi0(b)))) == J(braid_to_tangle(b)));
}

TEST_CASE("contraction lemmas", "[translator][contraction]") {
    Rng rng(9);
    // C_i C_j = C_j C_{i+2} for i >= j, under evaluation
    for (int n = 5; n <= 6; ++n)
        for (int j = 2; j < n - 2; ++j)
            for (int i = j; i < n - 2; ++i) {
                HopfDiagram D = random_diagram(rng, n, 10, 1);
                CHECK(eval_equal(contract_C(contract_C(D, j), i), contract_C(contract_C(D, i + 2), j)));
            }
    CHECK(eval_equal(contract_C(conv_identity(3), 2), conv_identity(1)));
    CHECK_THROWS_AS(contract_C(conv_identity(3), 1), term_error);
    CHECK_THROWS_AS(contract_C(conv_identity(3), 3), term_error);
    // c_i(psi(D)) = psi(C_i(D)) under the oracle
    Jones J;
    for (int k = 0; k < 12; ++k) {
        const int n = 3 + k % 2;
        HopfDiagram D = random_diagram(rng, n, 7, 1);
        const int i = 2 + k % (n - 2);
        const TangleWord lhs = contraction_word(psi_geom(D), i);
        const TangleWord rhs = psi_geom(contract_C(D, i));
        CHECK(J(lhs) == J(rhs));
        CHECK(eval_tangle_oracle(lhs, bundles()[1]) == eval_tangle_oracle(rhs, bundles()[1]));
    }
}

TEST_CASE("Psi of presentations and diagrams", "[translator]") {
    using L = PureLetter;
    PureBraidWord P{3, {L::sigma(1, 3), L::t(2), L::sigma(2, 3, -1)}};
    CHECK(psi_full(presentation_of(P)).term == psi0(P).term);
    CHECK(eval_equal(psi_full(braid_to_tangle(PureBraidWord{3, {}})), conv_identity(3)));
    // the +1 trefoil
    const TangleWord tre = fixture_tangle("trefoil_plus1.tangle");
    const HopfDiagram D = psi_full(tre);
    CHECK(D.n() == 1);
    CHECK(eval_equal(D, trefoil_diagram()));
    Jones J;
    CHECK(J(psi_geom(canonicalize(D))) == J(tre));
    // contracted presentations with twists
    Rng rng(12);
    for (int k = 0; k < 10; ++k) {
        PureBraidWord Q = random_word(rng, 4, 2);
        StringLinkPresentation T = contract_presentation(presentation_of(Q), 2 + k % 2);
        T.twists = {rng.range(-1, 1), rng.range(-1, 1)};
        INFO(presentation_to_string(T));
        CHECK(J(psi_geom(canonicalize(psi_full(T)))) == J(presentation_to_tangle(T)));
        for (const auto& B : bundles()) CHECK(check_retraction(T, B));
    }
}
