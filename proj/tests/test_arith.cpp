#include <catch_amalgamated.hpp>

#include "hopfdiag/tensor.hpp"

#include <random>

using namespace hopfdiag;
using big = boost::multiprecision::cpp_rational;

TEST_CASE("rational arithmetic matches cpp_rational", "[rat]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> small(-50, 50);
    std::uniform_int_distribution<long long> huge(INT64_MIN / 2, INT64_MAX / 2);
    for (int it = 0; it < 2000; ++it) {
        long long a = it % 3 ? small(rng) : huge(rng);
        long long b = small(rng);
        long long c = it % 5 ? small(rng) : huge(rng);
        long long e = small(rng);
        if (b == 0) b = 1;
        if (e == 0) e = 3;
        Rat x(a, b), y(c, e);
        big X = big(a) / big(b), Y = big(c) / big(e);
        CHECK((x + y).to_big() == X + Y);
        CHECK((x - y).to_big() == X - Y);
        CHECK((x * y).to_big() == X * Y);
        if (!y.is_zero()) CHECK((x / y).to_big() == X / Y);
        CHECK(Rat::from_big((x * y).to_big()) == x * y);
    }
}

TEST_CASE("rational overflow promotes and demotes", "[rat]") {
    Rat big1(INT64_MAX);
    Rat sq = big1 * big1;
    CHECK_FALSE(sq.is_small());
    Rat back = sq / big1;
    CHECK(back.is_small());
    CHECK(back == big1);
    CHECK(Rat::parse("-6/4") == Rat(-3, 2));
    CHECK(Rat::parse("12").str() == "12");
    CHECK((Rat(INT64_MIN) + Rat(0)).to_big() == big(INT64_MIN));
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials", "[cyclo]") {
    CHECK(CycloField::get(1).phi_poly == std::vector<long long>{-1, 1});
    CHECK(CycloField::get(6).phi_poly == std::vector<long long>{1, -1, 1});
    CHECK(CycloField::get(8).phi_poly == std::vector<long long>{1, 0, 0, 0, 1});
    CHECK(CycloField::get(9).phi_poly == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
    CHECK(CycloField::get(12).phi_poly == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(CycloField::get(16).degree == 8);
}

TEST_CASE("roots of unity", "[cyclo]") {
    for (int n : {2, 3, 4, 5, 6, 8, 12, 16}) {
        Scalar z = Scalar::zeta(n, 1);
        CHECK(z.pow(n).is_one());
        Scalar sum = Scalar::zero(n);
        for (int k = 0; k < n; ++k) sum += z.pow(k);
        CHECK(sum.is_zero());
        CHECK(z * z.inverse() == Scalar(1));
        CHECK(z.pow(-3) == Scalar::zeta(n, -3));
    }
    // i^2 = -1 in any field containing i
    CHECK(Scalar::zeta(4, 1) * Scalar::zeta(4, 1) == Scalar(-1));
    CHECK(Scalar::zeta(8, 2) == Scalar::zeta(4, 1));
    CHECK(Scalar::zeta(12, 4) + Scalar::zeta(6, 4) == Scalar(-1));
    CHECK(Scalar::zeta(2, 1) == Scalar(-1));
}

TEST_CASE("scalar inverse and printing", "[cyclo]") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int it = 0; it < 200; ++it) {
        int n = std::vector<int>{3, 4, 5, 8, 12}[it % 5];
        std::vector<Rat> c;
        for (int k = 0; k < n; ++k) c.push_back(Rat(coef(rng), 1 + it % 3));
        Scalar x = Scalar::from_coeffs(n, c);
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == Scalar(1));
        CHECK(Scalar::parse(x.str()) == x);
    }
    CHECK(Scalar(Rat(3, 4)).str() == "3/4");
    CHECK((Scalar(1) + Scalar::zeta(4, 1)).str() == "zeta4:[1,1]");
}

TEST_CASE("matrix inverse and kron", "[tensor]") {
    Mat m(2, 2);
    m(0, 0) = Scalar(2);
    m(0, 1) = Scalar::zeta(3, 1);
    m(1, 0) = Scalar(1);
    m(1, 1) = Scalar(1);
    Mat inv = inverse(m);
    CHECK(m * inv == Mat::identity(2));
    CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
    Mat sw = swap_map(2, 3);
    CHECK(swap_map(3, 2) * sw == Mat::identity(6));
}
