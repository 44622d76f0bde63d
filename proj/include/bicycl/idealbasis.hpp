#pragma once

#include <string>
#include <vector>

#include "bicycl/linalg.hpp"
#include "bicycl/zerosets.hpp"

namespace bicycl {

// Ideal basis B = {g_1, ..., g_{s+1}} with zero members dropped, plus the
// intermediate chains f_i^{(i)}, ..., f_s^{(i)} kept as provenance.
struct IdealBasis {
    std::vector<BiPoly> polys;
    std::vector<int> labels;  // 1-based original index; s+1 marks the pure-x product
    std::vector<std::vector<BiPoly>> chains;
};

// Lift of G(y) over F_{q^m} to g(x,y) over F_q with deg_x <= m-1 that agrees
// with G at x = xi: expand each coefficient over {1, xi, ..., xi^{m-1}} and
// replace xi^j by x^j.
BiPoly lift_to_bivariate(const UniPoly& G, const FieldElement& xi, int m,
                         const CodeParams& params);

IdealBasis build_basis(const EczProfile& profile, bool prune = false);

struct BasisReport {
    int ideal_dim = 0;
    int expected_dim = 0;
    // Informational: for each V0 class representative outside the CZ set,
    // the basis members (by position) that vanish there anyway.
    std::vector<std::pair<ZeroPoint, std::vector<int>>> extra_vanishing;
};

// Checks that every member vanishes on all of vc and that the generated
// ideal has F_q-dimension MN - |vc|; throws VerificationFailed otherwise.
BasisReport verify_basis(const IdealBasis& basis, const std::vector<ZeroPoint>& vc,
                         const V0Sets& v0);

}  // namespace bicycl
