#pragma once

#include "bundle.hpp"
#include "network.hpp"
#include "tangle.hpp"

#include <array>

namespace hopfdiag {

// Everything the tangle oracle needs about V and V*, derived from
// (c_{V,V}, theta_V, ev_V, coev_V). Index 0 is V (strand going up), 1 is V*.
struct RibbonData {
    std::size_t v = 1;
    std::array<std::array<Mat, 2>, 2> c, cinv;  // c[X][Y]: X (x) Y -> Y (x) X
    Mat ev, coev;                              // V* V -> 1, 1 -> V V*
    Mat ev_r, coev_r;                          // V V* -> 1, 1 -> V* V
    Mat theta;                                 // on V
};

// Derived braidings with V*, by naturality against ev/coev:
//   c_{V*,W}      = (ev x 1 x 1)(1 x c_{V,W}^{-1} x 1)(1 x 1 x coev)
//   c_{W,V*}^{-1} = (ev x 1 x 1)(1 x c_{W,V} x 1)(1 x 1 x coev)
// and the right duality ev' = ev c_{V,V*} (theta x 1), coev' = (1 x theta) c_{V,V*} coev.
inline RibbonData derive_ribbon(const RibbonModule& m) {
    const std::size_t v = m.dim;
    const Mat I = Mat::identity(v);
    auto conj = [&](const Mat& mid) { return kron(kron(m.ev, I), I) * kron(kron(I, mid), I) * kron(kron(I, I), m.coev); };
    RibbonData r;
    r.v = v;
    r.c[0][0] = m.c;
    r.cinv[0][0] = m.cinv;
    r.c[1][0] = conj(m.cinv);     // V* V -> V V*
    r.cinv[0][1] = conj(m.c);     // V* V -> V V*
    r.c[0][1] = inverse(r.cinv[0][1]);
    r.cinv[1][0] = inverse(r.c[1][0]);
    r.c[1][1] = conj(r.cinv[0][1]);
    r.cinv[1][1] = inverse(r.c[1][1]);
    r.ev = m.ev;
    r.coev = m.coev;
    r.theta = m.theta;
    r.ev_r = m.ev * r.c[0][1] * kron(m.theta, I);
    r.coev_r = kron(I, m.theta) * r.c[0][1] * m.coev;
    return r;
}

// Value of a tangle word under V: a v^{top} x v^{bottom} matrix, each endpoint
// carrying V or V* according to the orientation of its strand. Cross(p,+) is
// c_{X,Y} with X the object at p, Cross(p,-) is c_{Y,X}^{-1}.
inline Mat eval_tangle_oracle(const TangleWord& w, const RibbonData& R, TangleMode mode = TangleMode::any) {
    const ComponentReport rep = validate_tangle(w, mode);
    std::vector<SparseMap> maps;
    maps.reserve(w.events.size());
    std::vector<NetNode> nodes;
    int n_wires = 0;
    std::vector<int> cur(w.bottom_width);
    for (auto& x : cur) x = n_wires++;
    const std::vector<int> inputs = cur;
    auto obj = [&](std::size_t h, int p) { return rep.orient[h][p] > 0 ? 0 : 1; };
    for (std::size_t e = 0; e < w.events.size(); ++e) {
        const auto& ev = w.events[e];
        const int q = ev.pos - 1;
        std::vector<int> ins, outs;
        switch (ev.kind) {
            case EventKind::Cross: {
                const int X = obj(e, q), Y = obj(e, q + 1);
                maps.emplace_back(ev.sign > 0 ? R.c[X][Y] : R.cinv[Y][X]);
                ins = {cur[q], cur[q + 1]};
                outs = {n_wires++, n_wires++};
                cur[q] = outs[0];
                cur[q + 1] = outs[1];
                break;
            }
            case EventKind::Cap:
                maps.emplace_back(obj(e, q) == 1 ? R.ev : R.ev_r);
                ins = {cur[q], cur[q + 1]};
                cur.erase(cur.begin() + q, cur.begin() + q + 2);
                break;
            case EventKind::Cup:
                maps.emplace_back(obj(e + 1, q) == 0 ? R.coev : R.coev_r);
                outs = {n_wires++, n_wires++};
                cur.insert(cur.begin() + q, outs.begin(), outs.end());
                break;
        }
        nodes.push_back(NetNode{ins, outs, nullptr});
    }
    for (std::size_t k = 0; k < nodes.size(); ++k) nodes[k].map = &maps[k];
    return contract_network(nodes, n_wires, inputs, cur, R.v, true);
}

// Fundamental representation of U_q(sl2) at q = zeta_m (up to a scalar in
// the braiding): c(e_i e_i) = q e_i e_i, c(e_0 e_1) = e_1 e_0,
// c(e_1 e_0) = e_0 e_1 + (q - q^{-1}) e_1 e_0. With this scaling the right
// snake of the derived duality is q^{-4} theta^2, so theta = q^2.
inline RibbonModule jones_module(int m) {
    if (m < 3) throw std::invalid_argument("jones_module needs m >= 3");
    const Scalar q = Scalar::zeta(m, 1), qi = Scalar::zeta(m, -1);
    RibbonModule r;
    r.name = "jones" + std::to_string(m);
    r.dim = 2;
    r.c = Mat(4, 4);
    r.c(0, 0) = q;
    r.c(3, 3) = q;
    r.c(2, 1) = Scalar(1);
    r.c(1, 2) = Scalar(1);
    r.c(2, 2) = q - qi;
    r.cinv = inverse(r.c);
    r.ev = Mat(1, 4);
    r.coev = Mat(4, 1);
    r.ev(0, 0) = r.ev(0, 3) = Scalar(1);
    r.coev(0, 0) = r.coev(3, 0) = Scalar(1);
    r.theta = scale(Scalar::zeta(m, 2), Mat::identity(2));
    r.theta_inv = inverse(r.theta);
    return r;
}

}  // namespace hopfdiag
