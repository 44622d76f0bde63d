#pragma once

#include <string>
#include <vector>

#include "bicycl/idealbasis.hpp"

namespace bicycl {

// One block of the h-tuple layout: the F_q-expansion slot of a single ECZ
// point (xi_i, eta_{i,j}).
struct TensorBlock {
    int group = 0;
    int eta_idx = 0;
    int offset = 0;
    int width = 0;                     // m_i * n_{i,j}
    std::vector<FieldElement> basis;   // power basis of F_{q^{m_i n_{i,j}}} over F_q
};

// The vectors h_{k,l} for every grid position, plus the parity-check
// position set Pi once selected. Immutable after construction.
struct CheckTensor {
    EczProfile profile;
    SubfieldCtx fq;
    int d = 0;
    FqMat h;                           // (k*N+l) -> d-tuple of F_q indices
    std::vector<TensorBlock> blocks;
    std::vector<std::pair<int, int>> pi;  // row-major order
    std::vector<uint8_t> pi_mask;         // area-sized membership flags
    std::string pi_strategy;              // strategy that produced pi

    const CodeParams& params() const { return profile.params; }
    const FqVec& h_at(int k, int l) const { return h[(size_t)k * params().N + l]; }
    bool in_pi(int k, int l) const { return pi_mask[(size_t)k * params().N + l] != 0; }
    FqVec syndrome(const BiPoly& c) const;
    // Table-style dump: concatenated digits for prime base fields, else
    // space-separated element tokens.
    std::string h_string(int k, int l) const;
};

CheckTensor build_check_tensor(const EczProfile& profile);

// Primary strategy "staircase" places each group's m_i x n_i rectangle down
// the diagonal with groups ordered by descending n_i, then verifies
// independence and falls back to greedy row-major accumulation. Strategy
// "greedy" starts with the fallback directly.
void select_check_positions(CheckTensor& H, const std::string& strategy = "staircase");

// h_{i,j}(x,y) supported on Pi for every grid position, row-major; the
// monomial x^i y^j itself for (i,j) in Pi.
std::vector<BiPoly> express_h_polys(const CheckTensor& H);

struct GeneratorTensor {
    std::vector<BiPoly> h_polys;  // row-major
    std::vector<BiPoly> g_polys;  // g_{i,j} = {x^i y^j - h_{i,j}}_Omega; zero on Pi
};

GeneratorTensor build_generator_tensor(const CheckTensor& H);

}  // namespace bicycl
