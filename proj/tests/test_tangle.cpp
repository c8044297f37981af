#include <catch_amalgamated.hpp>

#include "hopfdiag/presentation.hpp"

#include <array>
#include <fstream>
#include <random>

using namespace hopfdiag;

namespace {

using Triple = std::array<int, 3>;

// pure word, first letter on top
ArtinWord sigmas(int n, const std::vector<Triple>& ls) {
    PureBraidWord P{n, {}};
    for (const auto& x : ls) P.letters.push_back(PureLetter::sigma(x[0], x[1], x[2]));
    return pure_to_artin(P);
}

ArtinWord random_artin(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> p(1, n - 1), s(0, 1);
    ArtinWord w{n, {}};
    for (int k = 0; k < len; ++k) w.letters.push_back(s(rng) ? p(rng) : -p(rng));
    return w;
}

// pure word obtained by conjugating random squares
ArtinWord random_pure_artin(std::mt19937& rng, int n, int factors) {
    ArtinWord w{n, {}};
    std::uniform_int_distribution<int> p(1, n - 1), s(0, 1), len(0, 4);
    for (int f = 0; f < factors; ++f) {
        ArtinWord c = random_artin(rng, n, len(rng));
        const int q = p(rng), e = s(rng) ? 1 : -1;
        w = artin_concat(w, c);
        w.letters.push_back(e * q);
        w.letters.push_back(e * q);
        w = artin_concat(w, artin_inverse(c));
    }
    return w;
}

PureBraidWord random_pure(std::mt19937& rng, int n, int len, bool twists = true) {
    PureBraidWord P{n, {}};
    std::uniform_int_distribution<int> a(1, n), s(0, 1), kind(0, 3);
    for (int k = 0; k < len; ++k) {
        const int e = s(rng) ? 1 : -1;
        if (n == 1 || (twists && kind(rng) == 0)) {
            P.letters.push_back(PureLetter::t(a(rng), e));
            continue;
        }
        int i = a(rng), j = a(rng);
        while (i == j) j = a(rng);
        P.letters.push_back(PureLetter::sigma(std::min(i, j), std::max(i, j), e));
    }
    return P;
}

TangleWord fixture_tangle(const std::string& name) {
    std::ifstream in(std::string(HOPFDIAG_FIXTURES) + "/" + name);
    REQUIRE(in);
    return parse_tangle(in, name);
}

}  // namespace

TEST_CASE("handle reduction decides triviality", "[braid]") {
    CHECK(braid_is_trivial(ArtinWord{3, {}}));
    CHECK(braid_is_trivial(ArtinWord{3, {1, -1, 2, -2}}));
    CHECK_FALSE(braid_is_trivial(ArtinWord{3, {1}}));
    CHECK_FALSE(braid_is_trivial(ArtinWord{3, {1, 1}}));
    // braid relation
    CHECK(braid_equal(ArtinWord{3, {1, 2, 1}}, ArtinWord{3, {2, 1, 2}}));
    CHECK(braid_equal(ArtinWord{4, {1, 3}}, ArtinWord{4, {3, 1}}));
    CHECK_FALSE(braid_equal(ArtinWord{3, {1, 2}}, ArtinWord{3, {2, 1}}));
    // full twist is central
    ArtinWord d2{3, {1, 2, 1, 1, 2, 1}};
    CHECK(braid_equal(artin_concat(d2, ArtinWord{3, {2}}), artin_concat(ArtinWord{3, {2}}, d2)));
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        ArtinWord w = random_artin(rng, 4, 10);
        CHECK(braid_is_trivial(artin_concat(w, artin_inverse(w))));
    }
}

TEST_CASE("pure generators satisfy the pure braid relations", "[braid]") {
    const int n = 5;
    int disjoint_fail = 0, nested_fail = 0, interleaved_commute = 0, t3_fail = 0, t4_fail = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const bool eq = braid_equal(sigmas(n, {{i, j, 1}, {k, l, 1}}), sigmas(n, {{k, l, 1}, {i, j, 1}}));
                    if (j < k && !eq) ++disjoint_fail;
                    if (i < k && l < j && !eq) ++nested_fail;
                    if (i < k && k < j && j < l && eq) ++interleaved_commute;
                }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                auto a = sigmas(n, {{i, j, 1}, {i, k, 1}, {j, k, 1}});
                auto b = sigmas(n, {{i, k, 1}, {j, k, 1}, {i, j, 1}});
                auto c = sigmas(n, {{j, k, 1}, {i, j, 1}, {i, k, 1}});
                if (!braid_equal(a, b) || !braid_equal(b, c)) ++t3_fail;
                for (int l = k + 1; l <= n; ++l) {
                    auto x = sigmas(n, {{i, k, 1}, {j, k, 1}, {j, l, 1}, {j, k, -1}});
                    auto y = sigmas(n, {{j, k, 1}, {j, l, 1}, {j, k, -1}, {i, k, 1}});
                    if (!braid_equal(x, y)) ++t4_fail;
                }
            }
    CHECK(disjoint_fail == 0);
    CHECK(nested_fail == 0);
    CHECK(interleaved_commute == 0);
    CHECK(t3_fail == 0);
    CHECK(t4_fail == 0);
}

TEST_CASE("sigma_{i,i+1} is a full positive twist of neighbours", "[braid]") {
    CHECK(sigma_artin(1, 2, 1) == std::vector<int>{1, 1});
    CHECK(sigma_artin(2, 4, -1) == std::vector<int>{-3, -2, -2, 3});
    CHECK(artin_is_pure(sigmas(5, {{1, 5, 1}, {2, 4, -1}})));
}

TEST_CASE("artin words convert to pure words", "[braid]") {
    CHECK_THROWS_AS(artin_to_pure(ArtinWord{3, {1}}), braid_error);
    CHECK(artin_to_pure(ArtinWord{2, {1, 1}}).letters == std::vector<PureLetter>{PureLetter::sigma(1, 2)});
    std::mt19937 rng(11);
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k < 60; ++k) {
            ArtinWord w = random_pure_artin(rng, n, 4);
            PureBraidWord P = artin_to_pure(w);
            CHECK_NOTHROW(P.check());
            CHECK(braid_equal(pure_to_artin(P), w));
        }
    // single bands with every pattern of intermediate strands
    for (int n = 3; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto P = artin_to_pure(ArtinWord{n, sigma_artin(i, j, -1)});
                CHECK(P.letters == std::vector<PureLetter>{PureLetter::sigma(i, j, -1)});
            }
}

TEST_CASE("doubling and deleting strands match cabling", "[braid]") {
    std::mt19937 rng(3);
    int fails = 0;
    for (int n = 2; n <= 4; ++n)
        for (int k = 0; k < 20; ++k) {
            PureBraidWord P = random_pure(rng, n, 5, false);
            ArtinWord a = pure_to_artin(P);
            for (int i = 1; i <= n; ++i) {
                if (!braid_equal(pure_to_artin(double_strand(P, i)), artin_double(a, i))) ++fails;
                if (!braid_equal(pure_to_artin(delete_strand(P, i)), artin_delete(a, i))) ++fails;
                // deleting either copy undoes the doubling
                CHECK(braid_equal(pure_to_artin(delete_strand(double_strand(P, i), i + 1)), a));
            }
        }
    CHECK(fails == 0);
    PureBraidWord t{2, {PureLetter::t(1)}};
    CHECK(pure_twists(double_strand(t, 1)) == std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(double_strand(t, 3), braid_error);
    CHECK_THROWS_AS(delete_strand(t, 0), braid_error);
}

TEST_CASE("tangle words validate by mode", "[tangle]") {
    CHECK_NOTHROW(validate_tangle(identity_tangle(3), TangleMode::string_link));
    TangleWord unknot{0, {TangleEvent::cup(1), TangleEvent::cap(1)}};
    CHECK(validate_tangle(unknot, TangleMode::closed_link).n_components == 1);
    CHECK_THROWS_AS(validate_tangle(unknot, TangleMode::string_link), tangle_error);
    // caps on neighbouring pairs form a handle tangle
    for (int n = 1; n <= 3; ++n) {
        TangleWord h{2 * n, {}};
        for (int k = n; k >= 1; --k) h.events.push_back(TangleEvent::cap(1));
        auto r = validate_tangle(h, TangleMode::handle);
        CHECK(r.n_arcs == n);
        CHECK_THROWS_AS(validate_tangle(h, TangleMode::string_link), tangle_error);
        if (n > 1) {
            TangleWord nested{2 * n, {}};
            for (int k = n; k >= 1; --k) nested.events.push_back(TangleEvent::cap(k));
            CHECK_THROWS_AS(validate_tangle(nested, TangleMode::handle), tangle_error);
        }
    }
    // a strand that does not come back to its own position
    CHECK_THROWS_AS(validate_tangle(TangleWord{2, {TangleEvent::cross(1, 1)}}, TangleMode::string_link), tangle_error);
    CHECK_THROWS_AS(TangleWord({1, {TangleEvent::cap(1)}}).check(), tangle_error);
}

TEST_CASE("crossing signs follow orientation", "[tangle]") {
    TangleWord w = braid_to_tangle(PureBraidWord{2, {PureLetter::sigma(1, 2)}});
    CHECK(w.events == std::vector<TangleEvent>{TangleEvent::cross(1, 1), TangleEvent::cross(1, 1)});
    auto r = validate_tangle(w, TangleMode::string_link);
    CHECK(r.crossing_sign(w, 0) == 1);
    CHECK(r.crossing_sign(w, 1) == 1);
    // a curl: both strands of the crossing belong to one component
    TangleWord c{1, curl_events(1, 1)};
    auto rc = validate_tangle(c, TangleMode::string_link);
    CHECK(rc.crossing_sign(c, 1) == 1);
    TangleWord cm{1, curl_events(1, -1)};
    CHECK(validate_tangle(cm, TangleMode::string_link).crossing_sign(cm, 1) == -1);
}

TEST_CASE("closure linking data", "[tangle]") {
    auto L1 = closure_linking(braid_to_tangle(PureBraidWord{1, {PureLetter::t(1)}}));
    CHECK(L1.linking_matrix == std::vector<std::vector<long long>>{{1}});
    CHECK(L1.b_plus == 1);
    CHECK(L1.b_minus == 0);
    auto Lm = closure_linking(braid_to_tangle(PureBraidWord{1, {PureLetter::t(1, -1)}}));
    CHECK(Lm.linking_matrix == std::vector<std::vector<long long>>{{-1}});
    CHECK(Lm.b_minus == 1);
    auto L0 = closure_linking(identity_tangle(3));
    CHECK(L0.linking_matrix == std::vector<std::vector<long long>>(3, std::vector<long long>(3, 0)));
    CHECK(L0.b_minus + L0.b_plus == 0);
    auto Lh = closure_linking(braid_to_tangle(PureBraidWord{2, {PureLetter::sigma(1, 2)}}));
    CHECK(Lh.linking_matrix == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    CHECK(Lh.b_minus == 1);
    CHECK(Lh.b_plus == 1);
    // closed diagram: unknot with no framing
    TangleWord unknot{0, {TangleEvent::cup(1), TangleEvent::cap(1)}};
    CHECK(closure_linking(unknot).linking_matrix == std::vector<std::vector<long long>>{{0}});
}

TEST_CASE("linking of a pure braid is read off its letters", "[tangle]") {
    std::mt19937 rng(5);
    for (int k = 0; k < 40; ++k) {
        const int n = 2 + k % 3;
        PureBraidWord P = random_pure(rng, n, 6);
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
        for (const auto& l : P.letters) {
            if (l.twist) {
                m[l.i - 1][l.i - 1] += l.sign;
            } else {
                m[l.i - 1][l.j - 1] += l.sign;
                m[l.j - 1][l.i - 1] += l.sign;
            }
        }
        auto L = closure_linking(braid_to_tangle(P));
        CHECK(L.linking_matrix == m);
        CHECK(L.b_minus + L.b_plus <= n);
    }
}

TEST_CASE("symmetric inertia", "[tangle]") {
    CHECK(symmetric_inertia({{0, 1}, {1, 0}}) == std::pair<int, int>{1, 1});
    CHECK(symmetric_inertia({{2, 1}, {1, 2}}) == std::pair<int, int>{2, 0});
    CHECK(symmetric_inertia({{1, 1}, {1, 1}}) == std::pair<int, int>{1, 0});
    CHECK(symmetric_inertia({{0, 0}, {0, -3}}) == std::pair<int, int>{0, 1});
    CHECK(symmetric_inertia({}) == std::pair<int, int>{0, 0});
}

TEST_CASE("contraction words", "[tangle]") {
    TangleWord c = contraction_word(identity_tangle(4), 2);
    CHECK(c.bottom_width == 2);
    CHECK(c.events == std::vector<TangleEvent>{TangleEvent::cup(1), TangleEvent::cap(2)});
    CHECK(normalize_tangle(c) == identity_tangle(2));
    CHECK_THROWS_AS(contraction_word(identity_tangle(4), 1), tangle_error);
    CHECK_THROWS_AS(contraction_word(identity_tangle(4), 4), tangle_error);
    CHECK_THROWS_AS(contraction_word(TangleWord{2, {TangleEvent::cap(1)}}, 1), tangle_error);
}

TEST_CASE("presentations and contractions", "[presentation]") {
    StringLinkPresentation T = presentation_of(PureBraidWord{4, {PureLetter::sigma(2, 3), PureLetter::sigma(1, 4, -1)}});
    T.twists = {0, 2, 0, -1};
    CHECK(presentation_strand(T, 3) == 3);
    StringLinkPresentation C = contract_presentation(T, 2);
    CHECK(C.n() == 2);
    CHECK(C.contractions == std::vector<int>{2});
    CHECK(C.twists == std::vector<int>{0, 0});
    CHECK(pure_twists(C.P) == std::vector<int>{0, 2, 0, -1});
    CHECK(presentation_strand(C, 2) == 4);
    // folding twists does not change the framed link
    CHECK(closure_linking(presentation_to_tangle(T)).linking_matrix ==
          closure_linking(presentation_to_tangle(fold_twists(T))).linking_matrix);
    CHECK_THROWS_AS(contract_presentation(C, 2), tangle_error);
    CHECK_THROWS_AS(contract_presentation(T, 1), tangle_error);
    CHECK_THROWS_AS(contract_presentation(T, 4), tangle_error);
    StringLinkPresentation bad = T;
    bad.twists.pop_back();
    CHECK_THROWS_AS(bad.check(), tangle_error);
    TangleWord w = presentation_to_tangle(C);
    CHECK(validate_tangle(w, TangleMode::string_link).n_components == 2);
}

TEST_CASE("left-handed rewrite", "[presentation]") {
    TangleWord tre = fixture_tangle("trefoil_plus1.tangle");
    auto r = validate_tangle(tre, TangleMode::string_link);
    int right = 0;
    for (std::size_t e = 0; e < tre.events.size(); ++e) right += is_right_pointing(r, tre, e);
    CHECK(right > 0);
    LeftHandedResult lh = make_left_handed(tre);
    auto r2 = validate_tangle(lh.word, TangleMode::string_link);
    for (std::size_t e = 0; e < lh.word.events.size(); ++e) CHECK_FALSE(is_right_pointing(r2, lh.word, e));
    CHECK(lh.alpha == std::vector<int>{right});
    // each kink is compensated by alpha
    auto L = closure_linking(lh.word);
    CHECK(L.linking_matrix[0][0] + lh.alpha[0] == closure_linking(tre).linking_matrix[0][0]);
}

TEST_CASE("extraction of a presentation from a diagram", "[presentation]") {
    TangleWord tre = fixture_tangle("trefoil_plus1.tangle");
    CHECK(closure_linking(tre).linking_matrix == std::vector<std::vector<long long>>{{1}});
    ExtractionTrace tr;
    StringLinkPresentation T = extract_presentation(tre, &tr);
    CHECK_NOTHROW(T.check());
    CHECK(T.n() == 1);
    CHECK(tr.stages.size() == T.contractions.size());
    for (const auto& s : tr.stages) CHECK_NOTHROW(validate_tangle(s, TangleMode::string_link));
    CHECK(closure_linking(T).linking_matrix == std::vector<std::vector<long long>>{{1}});
    // the two framing kinks become a twist; one maximum is left
    CHECK(T.P.n == 3);
    CHECK(T.contractions == std::vector<int>{2});
    CHECK(T.twists == std::vector<int>{-1});
    {
        TangleWord k{1, curl_events(1, -1)};
        auto c = curl_events(1, 1);
        k.events.insert(k.events.end(), c.begin(), c.end());
        k.events.push_back(TangleEvent::cup(1));
        k.events.push_back(TangleEvent::cross(2, -1));
        k.events.push_back(TangleEvent::cap(1));
        CHECK(strip_kinks(k) == std::vector<int>{-1});
        CHECK(k.events.empty());
    }
    // presentations reproduce their linking data through a round trip
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> tw(-2, 2);
    for (int k = 0; k < 25; ++k) {
        const int m = 1 + k % 2;
        const int n = 2 + 2 * m;
        StringLinkPresentation S = presentation_of(random_pure(rng, n, 6));
        for (int c = 0; c < m; ++c) S = contract_presentation(S, 2 + (k + c) % (S.n() - 2));
        for (auto& a : S.twists) a = tw(rng);
        TangleWord d = presentation_to_tangle(S);
        StringLinkPresentation E = extract_presentation(d);
        CHECK(E.n() == S.n());
        CHECK(closure_linking(E).linking_matrix == closure_linking(S).linking_matrix);
    }
    // a diagram with no extrema gives back its braid
    PureBraidWord P{3, {PureLetter::sigma(1, 3), PureLetter::sigma(2, 3, -1)}};
    StringLinkPresentation B = extract_presentation(braid_to_tangle(P));
    CHECK(B.contractions.empty());
    CHECK(braid_equal(pure_to_artin(B.P), pure_to_artin(P)));
}

TEST_CASE("string links and handles convert back and forth", "[presentation]") {
    TangleWord tre = fixture_tangle("trefoil_plus1.tangle");
    TangleWord h = convert_F_G(tre, FGDirection::to_handle);
    CHECK(validate_tangle(h, TangleMode::handle).n_arcs == 1);
    CHECK(normalize_tangle(convert_F_G(h, FGDirection::to_string_link)) == normalize_tangle(tre));
    CHECK_THROWS_AS(convert_F_G(h, FGDirection::to_handle), tangle_error);
    CHECK_THROWS_AS(convert_F_G(tre, FGDirection::to_string_link), tangle_error);
    std::mt19937 rng(23);
    for (int k = 0; k < 20; ++k) {
        const int n = 1 + k % 3;
        TangleWord s = braid_to_tangle(random_pure(rng, n, 5));
        TangleWord hs = convert_F_G(s, FGDirection::to_handle);
        CHECK(validate_tangle(hs, TangleMode::handle).n_arcs == n);
        TangleWord back = convert_F_G(hs, FGDirection::to_string_link);
        CHECK(normalize_tangle(back) == normalize_tangle(s));
        CHECK(closure_linking(back).linking_matrix == closure_linking(s).linking_matrix);
    }
}

TEST_CASE("text formats round trip", "[presentation]") {
    TangleWord tre = fixture_tangle("trefoil_plus1.tangle");
    CHECK(parse_tangle(tangle_to_string(tre)) == tre);
    std::ifstream bin(std::string(HOPFDIAG_FIXTURES) + "/sigma12.braid");
    PureBraidWord P = parse_braid(bin, "sigma12.braid");
    CHECK(P == PureBraidWord{2, {PureLetter::sigma(1, 2)}});
    CHECK(parse_braid(braid_to_string(P)) == P);
    std::ifstream pin(std::string(HOPFDIAG_FIXTURES) + "/hopf_contracted.pres");
    StringLinkPresentation T = parse_presentation(pin, "hopf_contracted.pres");
    CHECK(T.contractions == std::vector<int>{2});
    CHECK(T.twists == std::vector<int>{1, -1});
    CHECK(parse_presentation(presentation_to_string(T)) == T);
    CHECK(parse_presentation("braid n=2\ns 1 2 -\n").twists == std::vector<int>{0, 0});
    CHECK_THROWS_AS(parse_braid("braid n=2\ns 2 1 +\n"), parse_error);
    CHECK_THROWS_AS(parse_braid("braid n=2\nt 3 +\n"), parse_error);
    CHECK_THROWS_AS(parse_braid("s 1 2 +\n"), parse_error);
    CHECK_THROWS_AS(parse_presentation("braid n=2\ncontract 2\n"), parse_error);
    CHECK_THROWS_AS(parse_tangle("tangle w=1\ncap 1\n"), parse_error);
    CHECK_THROWS_AS(parse_tangle("tangle w=2\nx 1 *\n"), parse_error);
}
