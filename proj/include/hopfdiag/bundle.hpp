#pragma once

#include "tensor.hpp"

#include <string>
#include <vector>

namespace hopfdiag {

// Ribbon data of one object V of the category, used by the tangle oracle.
// ev: V* (x) V -> 1 (1 x v^2), coev: 1 -> V (x) V* (v^2 x 1).
struct RibbonModule {
    std::string name;
    std::size_t dim = 1;
    Mat c, cinv;              // c_{V,V}^{+-1}
    Mat theta, theta_inv;     // v x v
    Mat ev, coev;
};

// A test module of a bundle: ribbon data plus the universal dinatural map
// i_V: V* (x) V -> A (d x v^2).
struct TestModule {
    RibbonModule rib;
    Mat iv;
};

// Structure tensors of the coend A (dimension d). Maps are rows = outputs.
struct CoendBundle {
    std::string name;
    std::size_t d = 1;
    int field = 1;  // scalars live in Q(zeta_field)
    Mat delta;      // d^2 x d
    Mat eps;        // 1 x d
    Mat S, Sinv;    // d x d
    Mat mu;         // d x d^2
    Mat eta;        // d x 1
    Mat omega_plus, omega_minus;  // 1 x d^2
    Mat theta_plus, theta_minus;  // 1 x d
    Mat c, cinv;                  // d^2 x d^2, c_{A,A}^{+-1}
    std::vector<TestModule> modules;
};

}  // namespace hopfdiag
