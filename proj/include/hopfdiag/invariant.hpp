#pragma once

#include "oracle.hpp"

#include <optional>

namespace hopfdiag {

struct KirbyCandidate {
    Mat alpha;  // d x 1
    bool s_fixed = false;
    bool coproduct_law = false;  // (mu x id)(id x Delta)(alpha x alpha) = alpha x alpha
    bool kirby_ok = false;
    bool normalizable = false;
    Scalar theta_plus, theta_minus;  // theta_A^{+-} alpha
};

// Checks only the sufficient conditions S alpha = alpha and the coproduct law;
// the quantified conditions over all diagrams are not attempted.
inline KirbyCandidate kirby_check(const Mat& alpha, const CoendBundle& b) {
    if (alpha.rows != b.d || alpha.cols != 1) throw std::invalid_argument("Kirby candidate must be a d x 1 vector");
    const Mat I = Mat::identity(b.d);
    KirbyCandidate k;
    k.alpha = alpha;
    k.s_fixed = b.S * alpha == alpha;
    const Mat aa = kron(alpha, alpha);
    k.coproduct_law = kron(b.mu, I) * kron(I, b.delta) * aa == aa;
    k.kirby_ok = k.s_fixed && k.coproduct_law;
    k.theta_plus = (b.theta_plus * alpha)(0, 0);
    k.theta_minus = (b.theta_minus * alpha)(0, 0);
    k.normalizable = !k.theta_plus.is_zero() && !k.theta_minus.is_zero();
    return k;
}

// Named candidates: "unit" (eta_A), "uniform" (all ones), "zero".
inline Mat named_alpha(const std::string& name, const CoendBundle& b) {
    if (name == "unit") return b.eta;
    Mat a(b.d, 1);
    if (name == "zero") return a;
    if (name == "uniform") {
        for (std::size_t g = 0; g < b.d; ++g) a(g, 0) = Scalar(1);
        return a;
    }
    throw std::invalid_argument("unknown Kirby candidate '" + name + "' (expected unit, uniform or zero)");
}

inline const std::vector<std::string>& named_alphas() {
    static const std::vector<std::string> names = {"unit", "uniform", "zero"};
    return names;
}

class invariant_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TauResult {
    Scalar tau;
    Scalar raw;  // E(D) alpha^{(x) n}
    LinkingData link;
    KirbyCandidate kirby;
    HopfDiagram diagram;
};

// E(D) alpha^{(x) n} as a scalar.
inline Scalar contract_alpha(const HopfDiagram& D, const Mat& alpha, const CoendBundle& b) {
    Mat a = Mat::identity(1);
    for (int k = 0; k < D.n(); ++k) a = kron(a, alpha);
    return (eval_term(D.term, b) * a)(0, 0);
}

// (theta+ alpha)^{b_- - n_L} (theta- alpha)^{-b_-} E(D) alpha^{(x) n}
inline Scalar tau_formula(const Scalar& raw, const KirbyCandidate& k, const LinkingData& L) {
    return k.theta_plus.pow(L.b_minus - L.n_L) * k.theta_minus.pow(-L.b_minus) * raw;
}

inline TauResult invariant_tau(const StringLinkPresentation& T, const Mat& alpha, const CoendBundle& b) {
    TauResult r;
    r.kirby = kirby_check(alpha, b);
    if (!r.kirby.normalizable) throw invariant_error("Kirby candidate is not normalizable: theta+-(alpha) is not invertible");
    r.diagram = psi_full(T);
    r.link = closure_linking(T);
    r.raw = contract_alpha(r.diagram, alpha, b);
    r.tau = tau_formula(r.raw, r.kirby, r.link);
    return r;
}

inline TauResult invariant_tau(const TangleWord& w, const Mat& alpha, const CoendBundle& b) {
    validate_tangle(w, TangleMode::string_link);
    return invariant_tau(extract_presentation(w), alpha, b);
}

// tau of the unknot with framing f for a Z/m bundle and alpha = sum of all
// group elements, summed directly: sum_g theta_g^f normalized by the Gauss
// sums sum_g theta_g^{+-1}.
inline Scalar gauss_sum_tau(const AbelianParams& p, int f) {
    Scalar top = Scalar::constant(p.order(), Rat(0)), gp = top, gm = top;
    for (int g = 0; g < p.m; ++g) {
        top = top + p.theta(g).pow(f);
        gp = gp + p.theta(g);
        gm = gm + p.theta(g).inverse();
    }
    const int b_minus = f < 0 ? 1 : 0;
    return gp.pow(b_minus - 1) * gm.pow(-b_minus) * top;
}

}  // namespace hopfdiag
