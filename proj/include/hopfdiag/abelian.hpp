#pragma once

#include "bundle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfdiag {

// Pointed ribbon category of Z/m-graded lines over Q(zeta_{2m}):
// braiding beta(g,h) = zeta_{2m}^{2 c g h}, twist theta_g = zeta_{2m}^{t_g}.
struct AbelianParams {
    int m = 1;
    int c = 0;
    std::vector<int> twist;  // t_g for g = 0..m-1

    int order() const { return 2 * m; }
    Scalar beta(int g, int h) const { return Scalar::zeta(order(), 2LL * c * g * h); }
    Scalar theta(int g) const { return Scalar::zeta(order(), twist.at(((g % m) + m) % m)); }
};

class bundle_error : public std::runtime_error {
public:
    bundle_error(const std::string& axiom, const std::string& msg) : std::runtime_error(msg), axiom_(axiom) {}
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

// theta_{g+h} = theta_g theta_h beta(g,h) beta(h,g) and theta_{-g} = theta_g.
inline void check_abelian_params(const AbelianParams& p) {
    if (p.m < 1) throw bundle_error("parameters", "group order must be positive");
    if (static_cast<int>(p.twist.size()) != p.m) throw bundle_error("parameters", "twist table must have m entries");
    for (int g = 0; g < p.m; ++g) {
        if (p.theta(g) != p.theta(p.m - g))
            throw bundle_error("twist-duality", "twist of g and -g differ at g=" + std::to_string(g));
        for (int h = 0; h < p.m; ++h)
            if (p.theta(g + h) != p.theta(g) * p.theta(h) * p.beta(g, h) * p.beta(h, g))
                throw bundle_error("twist-compatibility",
                                   "twist incompatible with braiding at (" + std::to_string(g) + "," + std::to_string(h) + ")");
    }
}

// Structure tensors of the coend A = span{e_g} and the regular test module.
// No validation is done here.
inline CoendBundle make_abelian_bundle(const AbelianParams& p, const std::string& name) {
    const int m = p.m;
    const std::size_t d = static_cast<std::size_t>(m), d2 = d * d;
    auto idx = [m](int g, int h) { return static_cast<std::size_t>(g * m + h); };
    auto neg = [m](int g) { return (m - g) % m; };
    CoendBundle b;
    b.name = name;
    b.d = d;
    b.field = p.order();
    b.delta = Mat(d2, d);
    b.eps = Mat(1, d);
    b.S = Mat(d, d);
    b.mu = Mat(d, d2);
    b.eta = Mat(d, 1);
    b.omega_plus = Mat(1, d2);
    b.omega_minus = Mat(1, d2);
    b.theta_plus = Mat(1, d);
    b.theta_minus = Mat(1, d);
    b.c = swap_map(d, d);
    b.cinv = swap_map(d, d);
    for (int g = 0; g < m; ++g) {
        b.delta(idx(g, g), g) = Scalar(1);
        b.eps(0, g) = Scalar(1);
        b.S(neg(g), g) = Scalar(1);
        b.theta_plus(0, g) = p.theta(g);
        b.theta_minus(0, g) = p.theta(g).inverse();
        for (int h = 0; h < m; ++h) {
            b.mu((g + h) % m, idx(g, h)) = Scalar(1);
            Scalar dbl = p.beta(g, h) * p.beta(h, g);
            b.omega_plus(0, idx(g, h)) = dbl;
            b.omega_minus(0, idx(g, h)) = dbl.inverse();
        }
    }
    b.eta(0, 0) = Scalar(1);
    b.Sinv = b.S;

    TestModule tm;
    RibbonModule& v = tm.rib;
    v.name = "regular";
    v.dim = d;
    v.c = Mat(d2, d2);
    v.cinv = Mat(d2, d2);
    v.theta = Mat(d, d);
    v.theta_inv = Mat(d, d);
    v.ev = Mat(1, d2);
    v.coev = Mat(d2, 1);
    tm.iv = Mat(d, d2);
    for (int g = 0; g < m; ++g) {
        v.theta(g, g) = p.theta(g);
        v.theta_inv(g, g) = p.theta(g).inverse();
        v.ev(0, idx(g, g)) = Scalar(1);
        v.coev(idx(g, g), 0) = Scalar(1);
        tm.iv(g, idx(g, g)) = Scalar(1);
        for (int h = 0; h < m; ++h) {
            v.c(idx(h, g), idx(g, h)) = p.beta(g, h);
            v.cinv(idx(g, h), idx(h, g)) = p.beta(g, h).inverse();
        }
    }
    b.modules.push_back(std::move(tm));
    return b;
}

// Built-in parameter sets. The twists are beta(g,g) chi(g) with chi a sign character,
// chosen so that the uniform Kirby element is normalizable.
inline AbelianParams builtin_params(const std::string& name) {
    if (name == "trivial") return {1, 0, {0}};
    if (name == "zmod2") return {2, 1, {0, 0}};
    if (name == "zmod3") return {3, 1, {0, 2, 2}};
    if (name == "zmod4") return {4, 1, {0, 2, 0, 2}};
    throw bundle_error("parameters", "unknown built-in bundle '" + name + "'");
}

inline const std::vector<std::string>& builtin_bundle_names() {
    static const std::vector<std::string> names = {"trivial", "zmod2", "zmod3", "zmod4"};
    return names;
}

}  // namespace hopfdiag
