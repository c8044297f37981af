#pragma once

#include "abelian.hpp"
#include "ribbon.hpp"
#include "translator.hpp"
#include "validate.hpp"

#include <stdexcept>

namespace hopfdiag {

inline const TestModule& bundle_module(const CoendBundle& b, std::size_t mi) {
    if (mi >= b.modules.size())
        throw std::out_of_range("bundle '" + b.name + "' has no test module " + std::to_string(mi));
    return b.modules[mi];
}

// T_{V,...,V} of a tangle word under test module mi: v^{top} x v^{bottom}.
inline Mat eval_tangle_oracle(const TangleWord& w, const CoendBundle& b, std::size_t mi = 0,
                              TangleMode mode = TangleMode::any) {
    return eval_tangle_oracle(w, derive_ribbon(bundle_module(b, mi).rib), mode);
}

inline Mat iv_power(const TestModule& m, int n) {
    Mat r = Mat::identity(1);
    for (int k = 0; k < n; ++k) r = kron(r, m.iv);
    return r;
}

// E(D) (i_V x ... x i_V) against the handle phi(D).
inline bool check_factorization(const HopfDiagram& D, const CoendBundle& b, std::size_t mi = 0) {
    const TestModule& m = bundle_module(b, mi);
    const Mat lhs = eval_tangle_oracle(phi(D), derive_ribbon(m.rib), TangleMode::handle);
    return lhs == eval_term(D.term, b) * iv_power(m, D.n());
}

// The handle of a string link against E(Psi(T)) (i_V x ... x i_V).
inline bool check_retraction(const TangleWord& T, const HopfDiagram& D, const CoendBundle& b, std::size_t mi = 0) {
    const TestModule& m = bundle_module(b, mi);
    const Mat lhs = eval_tangle_oracle(convert_F_G(T, FGDirection::to_handle), derive_ribbon(m.rib), TangleMode::handle);
    return lhs == eval_term(D.term, b) * iv_power(m, D.n());
}

inline bool check_retraction(const StringLinkPresentation& T, const CoendBundle& b, std::size_t mi = 0) {
    return check_retraction(presentation_to_tangle(T), psi_full(T), b, mi);
}

// Each generator with its outputs closed off in a few ways.
inline std::vector<HopfDiagram> factorization_probes() {
    std::vector<HopfDiagram> out;
    for (Gen g : all_gens) {
        const BraidedTerm t = gen_term(g);
        const int cod = t.cod();
        BraidedTerm e = t;
        for (int k = 0; k < cod; ++k) e.slices.push_back(Slice{0, Gen::Eps, cod - 1 - k});
        out.emplace_back(e);
        if (cod >= 1) {
            BraidedTerm u = t;
            u.slices.push_back(Slice{0, Gen::ThetaPlus, cod - 1});
            for (int k = 1; k < cod; ++k) u.slices.push_back(Slice{0, Gen::Eps, cod - 1 - k});
            out.emplace_back(u);
        }
        if (cod == 1) {
            BraidedTerm u = t;
            u.slices.push_back(Slice{0, Gen::Delta, 0});
            u.slices.push_back(Slice{0, Gen::OmegaPlus, 0});
            out.emplace_back(u);
        }
        if (cod == 2)
            for (Gen w : {Gen::OmegaPlus, Gen::OmegaMinus}) {
                BraidedTerm u = t;
                u.slices.push_back(Slice{0, w, 0});
                out.emplace_back(u);
            }
    }
    return out;
}

// Ribbon axioms of each test module, then factorization on the probes.
inline void validate_modules(const CoendBundle& b, ValidationReport& r) {
    using detail::expect;
    using detail::same_shape;
    for (std::size_t mi = 0; mi < b.modules.size(); ++mi) {
        const TestModule& tm = b.modules[mi];
        const RibbonModule& m = tm.rib;
        const std::size_t v = m.dim, v2 = v * v;
        const bool shapes = same_shape(m.c, v2, v2) && same_shape(m.cinv, v2, v2) && same_shape(m.theta, v, v) &&
                            same_shape(m.theta_inv, v, v) && same_shape(m.ev, 1, v2) && same_shape(m.coev, v2, 1) &&
                            same_shape(tm.iv, b.d, v2);
        expect(r, shapes, "module-shapes");
        if (!shapes) continue;
        const Mat I = Mat::identity(v), I2 = Mat::identity(v2);
        const Mat c12 = kron(m.c, I), c23 = kron(I, m.c);
        expect(r, m.c * m.cinv == I2 && m.cinv * m.c == I2 && c12 * c23 * c12 == c23 * c12 * c23, "module-braiding");
        expect(r, m.theta * m.theta_inv == I && m.theta_inv * m.theta == I &&
                      m.c * kron(m.theta, m.theta) == kron(m.theta, m.theta) * m.c,
               "module-twist");
        const bool snake = kron(I, m.ev) * kron(m.coev, I) == I && kron(m.ev, I) * kron(I, m.coev) == I;
        expect(r, snake, "module-snake");
        if (!snake) continue;
        const RibbonData R = derive_ribbon(m);
        // the derived right duality must satisfy its own snake identities
        expect(r, kron(R.ev_r, I) * kron(I, R.coev_r) == I && kron(I, R.ev_r) * kron(R.coev_r, I) == I, "module-ribbon");
        bool fac = true;
        for (const auto& D : factorization_probes()) fac = fac && check_factorization(D, b, mi);
        expect(r, fac, "factorization");
    }
}

inline ValidationReport bundle_validate(const CoendBundle& b) {
    ValidationReport r;
    if (!check_shapes(b, r)) return r;
    validate_algebra(b, r);
    validate_modules(b, r);
    return r;
}

// Built and validated; throws bundle_error naming the first failed axiom.
inline CoendBundle bundle_from_abelian_group(const AbelianParams& p, const std::string& name = "") {
    check_abelian_params(p);
    CoendBundle b = make_abelian_bundle(p, name.empty() ? "zmod" + std::to_string(p.m) : name);
    const ValidationReport r = bundle_validate(b);
    if (!r.ok()) throw bundle_error(r.failures.front(), "bundle '" + b.name + "' fails axiom " + r.failures.front());
    return b;
}

inline CoendBundle builtin_bundle(const std::string& name) { return bundle_from_abelian_group(builtin_params(name), name); }

}  // namespace hopfdiag
