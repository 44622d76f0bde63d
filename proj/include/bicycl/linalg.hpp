#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bicycl/bipoly.hpp"
#include "bicycl/gf.hpp"

namespace bicycl {

// Dense arithmetic over the base subfield F_q, driven by small q x q
// tables. Vectors hold element indices: 0 is the zero element, nonzero
// elements follow in ascending alpha-exponent order.
struct SubfieldCtx {
    const FieldTower* tower = nullptr;
    int q = 0;
    int64_t step = 0;  // (p^{eL}-1)/(q-1)
    std::vector<FieldElement> elems;
    std::vector<std::vector<uint8_t>> addt, mult;
    std::vector<uint8_t> negt, invt;

    SubfieldCtx() = default;
    explicit SubfieldCtx(const FieldTower* t);

    uint8_t index_of(const FieldElement& x) const;
    const FieldElement& elem(uint8_t i) const { return elems[i]; }
    uint8_t add(uint8_t a, uint8_t b) const { return addt[a][b]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mult[a][b]; }
    uint8_t neg(uint8_t a) const { return negt[a]; }
    uint8_t inv(uint8_t a) const;
};

using FqVec = std::vector<uint8_t>;
using FqMat = std::vector<FqVec>;

struct Rref {
    FqMat rows;               // nonzero rows in reduced row echelon form
    std::vector<int> pivots;  // pivot column per row
    int rank = 0;
};

Rref rref(const SubfieldCtx& fq, FqMat rows);

// Reduce v against an RREF; returns the residual.
FqVec reduce_against(const SubfieldCtx& fq, const Rref& r, FqVec v);
bool in_row_space(const SubfieldCtx& fq, const Rref& r, const FqVec& v);

// Basis of {x : x A = 0} for the row-vector convention, i.e. the null
// space of A^T; A given as a list of rows of equal length.
FqMat left_nullspace(const SubfieldCtx& fq, const FqMat& rows);

// Solve sum_k c_k cols[k] = target for independent columns; nullopt when
// inconsistent.
std::optional<FqVec> solve_combination(const SubfieldCtx& fq, const FqMat& cols,
                                       const FqVec& target);

// Row-major flattening of a base-field coefficient grid and back.
FqVec bipoly_to_vec(const SubfieldCtx& fq, const BiPoly& f);
BiPoly vec_to_bipoly(const SubfieldCtx& fq, const CodeParams& params, const FqVec& v);

// F_q-dimension of the ideal generated by the given ring elements: the rank
// of the span of all monomial shifts.
int ideal_dimension(const std::vector<BiPoly>& polys, const CodeParams& params);

}  // namespace bicycl
