#pragma once

#include "eval.hpp"
#include "relations.hpp"

#include <string>
#include <vector>

namespace hopfdiag {

struct ValidationReport {
    std::vector<std::string> failures;  // names of failed axioms, in check order
    bool ok() const { return failures.empty(); }
    bool failed(const std::string& axiom) const {
        for (const auto& f : failures)
            if (f == axiom) return true;
        return false;
    }
};

namespace detail {
inline void expect(ValidationReport& r, bool cond, const std::string& name) {
    if (!cond && !r.failed(name)) r.failures.push_back(name);
}

inline bool same_shape(const Mat& m, std::size_t rows, std::size_t cols) { return m.rows == rows && m.cols == cols; }
}  // namespace detail

inline bool check_shapes(const CoendBundle& b, ValidationReport& r) {
    const std::size_t d = b.d, d2 = d * d;
    using detail::same_shape;
    bool ok = same_shape(b.delta, d2, d) && same_shape(b.eps, 1, d) && same_shape(b.S, d, d) && same_shape(b.Sinv, d, d) &&
              same_shape(b.mu, d, d2) && same_shape(b.eta, d, 1) && same_shape(b.omega_plus, 1, d2) &&
              same_shape(b.omega_minus, 1, d2) && same_shape(b.theta_plus, 1, d) && same_shape(b.theta_minus, 1, d) &&
              same_shape(b.c, d2, d2) && same_shape(b.cinv, d2, d2);
    detail::expect(r, ok, "shapes");
    return ok;
}

// Hopf algebra, braiding and quotient-relation axioms on A.
inline void validate_algebra(const CoendBundle& b, ValidationReport& r) {
    using detail::expect;
    const std::size_t d = b.d;
    const Mat I = Mat::identity(d), I2 = Mat::identity(d * d), one = Mat::identity(1);
    const Mat& D = b.delta;
    const Mat& M = b.mu;

    expect(r, kron(D, I) * D == kron(I, D) * D, "coassociativity");
    expect(r, kron(b.eps, I) * D == I && kron(I, b.eps) * D == I, "counit");
    expect(r, M * kron(M, I) == M * kron(I, M), "associativity");
    expect(r, M * kron(b.eta, I) == I && M * kron(I, b.eta) == I, "unit");

    expect(r, b.c * b.cinv == I2 && b.cinv * b.c == I2, "braiding-inverse");
    const Mat c12 = kron(b.c, I), c23 = kron(I, b.c);
    expect(r, c12 * c23 * c12 == c23 * c12 * c23, "yang-baxter");
    // naturality of c_{A,A} with respect to the structure maps
    {
        bool nat = c12 * c23 * kron(D, I) == kron(I, D) * b.c && c23 * c12 * kron(I, D) == kron(D, I) * b.c &&
                   b.c * kron(b.S, I) == kron(I, b.S) * b.c &&
                   b.c * kron(I, b.S) == kron(b.S, I) * b.c && kron(I, b.eps) * b.c == kron(b.eps, I) &&
                   kron(b.eps, I) * b.c == kron(I, b.eps) && kron(I, b.theta_plus) * b.c == kron(b.theta_plus, I) &&
                   kron(b.theta_minus, I) * b.c == kron(I, b.theta_minus);
        expect(r, nat, "braiding-naturality");
    }
    {
        Mat lhs = D * M;
        Mat rhs = kron(M, M) * kron(kron(I, b.c), I) * kron(D, D);
        bool bi = lhs == rhs && b.eps * M == kron(b.eps, b.eps) && D * b.eta == kron(b.eta, b.eta) && b.eps * b.eta == one;
        expect(r, bi, "bialgebra");
    }
    {
        Mat unit = b.eta * b.eps;
        expect(r, M * kron(b.S, I) * D == unit && M * kron(I, b.S) * D == unit, "antipode");
    }
    expect(r, b.S * b.Sinv == I && b.Sinv * b.S == I, "antipode-inverse");
    expect(r, b.omega_plus == b.omega_minus * kron(b.Sinv, I), "omega-antipode");

    for (const auto& rel : bar_relations())
        expect(r, eval_term(rel.lhs, b) == eval_term(rel.rhs, b), "relation-" + rel.name);
}

}  // namespace hopfdiag
