#pragma once

#include "motivix/cmlat/model.hpp"
#include "motivix/corr/corr2.hpp"
#include "motivix/fermat/curve.hpp"

#include <string>
#include <vector>

namespace motivix::fermat {

struct C6Morphism {
    std::string name;
    int base = 1;  // 1, 2 or 3
    Perm3 sigma{0, 1, 2};
    Poly2 form;  // coefficient of the pulled-back target form
    Rep rep = Rep::None;
    DegreeReport degree;
    long listed_degree = 0;
};

// The sextic x⁶ + y⁶ + 1 = 0 with ten maps to elliptic curves: φ₁ twisted
// by all of Σ₃, φ₂ by three permutations, and φ₃.
struct C6Instance {
    int g = 10;
    std::vector<C6Morphism> morphisms;
    std::vector<Int> exponents;         // computed degrees
    std::vector<Int> listed_exponents;  // 6×6, 24×3, 4
    cmlat::AbelianModel model;          // axiomatic, computed exponents
    cmlat::AbelianModel listed_model;   // axiomatic, listed exponents
    corr::GridProjectors grids;
    Int m2_tr;                          // dim M²_tr of the self-product
    int rank_g1 = 0, rank_g2 = 0, rank_g2_listed = 0;
    std::vector<std::string> notes;
};

C6Instance build_c6_instance(const DegreeOptions& opt = {});

}  // namespace motivix::fermat
