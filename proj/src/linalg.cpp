#include "bicycl/linalg.hpp"

namespace bicycl {

SubfieldCtx::SubfieldCtx(const FieldTower* t) : tower(t) {
    if (!t) fail(Errc::InvalidArgument, "null tower");
    if (t->q() > 255) fail(Errc::CapExceeded, "base field too large for index tables");
    q = (int)t->q();
    step = (int64_t)(t->group_order() / (t->q() - 1));
    elems.reserve(q);
    elems.push_back(t->zero());
    for (int i = 0; i < q - 1; ++i) elems.push_back(t->alpha_pow(step * i));
    addt.assign(q, std::vector<uint8_t>(q, 0));
    mult.assign(q, std::vector<uint8_t>(q, 0));
    negt.assign(q, 0);
    invt.assign(q, 0);
    for (int a = 0; a < q; ++a) {
        negt[a] = index_of(t->neg(elems[a]));
        if (a) invt[a] = index_of(t->inv(elems[a]));
        for (int b = 0; b < q; ++b) {
            addt[a][b] = index_of(t->add(elems[a], elems[b]));
            mult[a][b] = index_of(t->mul(elems[a], elems[b]));
        }
    }
}

uint8_t SubfieldCtx::index_of(const FieldElement& x) const {
    if (x.is_zero()) return 0;
    if (x.exp % step != 0) fail(Errc::ParamMismatch, "element outside F_q");
    return (uint8_t)(x.exp / step + 1);
}

uint8_t SubfieldCtx::inv(uint8_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    return invt[a];
}

Rref rref(const SubfieldCtx& fq, FqMat rows) {
    Rref r;
    if (rows.empty()) return r;
    size_t ncols = rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
        size_t pr = row;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[row], rows[pr]);
        uint8_t pinv = fq.inv(rows[row][col]);
        for (size_t c = col; c < ncols; ++c) rows[row][c] = fq.mul(rows[row][c], pinv);
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == row || rows[rr][col] == 0) continue;
            uint8_t f = fq.neg(rows[rr][col]);
            for (size_t c = col; c < ncols; ++c)
                rows[rr][c] = fq.add(rows[rr][c], fq.mul(f, rows[row][c]));
        }
        r.pivots.push_back((int)col);
        ++row;
    }
    rows.resize(row);
    r.rows = std::move(rows);
    r.rank = (int)row;
    return r;
}

FqVec reduce_against(const SubfieldCtx& fq, const Rref& r, FqVec v) {
    for (int i = 0; i < r.rank; ++i) {
        uint8_t c = v[(size_t)r.pivots[i]];
        if (c == 0) continue;
        uint8_t f = fq.neg(c);
        const FqVec& row = r.rows[(size_t)i];
        for (size_t k = 0; k < v.size(); ++k) v[k] = fq.add(v[k], fq.mul(f, row[k]));
    }
    return v;
}

bool in_row_space(const SubfieldCtx& fq, const Rref& r, const FqVec& v) {
    FqVec res = reduce_against(fq, r, v);
    for (uint8_t x : res)
        if (x) return false;
    return true;
}

FqMat left_nullspace(const SubfieldCtx& fq, const FqMat& rows) {
    if (rows.empty()) return {};
    size_t n = rows.size();        // ambient dimension of the left factor
    size_t m = rows[0].size();
    // Transpose, then RREF; free columns give the basis.
    FqMat t(m, FqVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) t[j][i] = rows[i][j];
    Rref r = rref(fq, std::move(t));
    std::vector<bool> is_pivot(n, false);
    for (int p : r.pivots) is_pivot[(size_t)p] = true;
    FqMat basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        FqVec v(n, 0);
        v[free_col] = 1;  // index 1 = field one
        for (int i = 0; i < r.rank; ++i)
            v[(size_t)r.pivots[i]] = fq.neg(r.rows[(size_t)i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

FqVec bipoly_to_vec(const SubfieldCtx& fq, const BiPoly& f) {
    const CodeParams& P = f.params();
    FqVec v((size_t)P.area());
    for (int i = 0; i < P.M; ++i)
        for (int j = 0; j < P.N; ++j) v[(size_t)i * P.N + j] = fq.index_of(f.at(i, j));
    return v;
}

BiPoly vec_to_bipoly(const SubfieldCtx& fq, const CodeParams& params, const FqVec& v) {
    if ((int)v.size() != params.area()) fail(Errc::InvalidArgument, "vector length mismatch");
    BiPoly f(params);
    for (int i = 0; i < params.M; ++i)
        for (int j = 0; j < params.N; ++j) f.set(i, j, fq.elem(v[(size_t)i * params.N + j]));
    return f;
}

int ideal_dimension(const std::vector<BiPoly>& polys, const CodeParams& params) {
    SubfieldCtx fq(params.F());
    FqMat rows;
    for (const auto& g : polys) {
        if (!g.params().same(params)) fail(Errc::ParamMismatch, "ring mismatch");
        g.require_base_field("ideal generator");
        BiPoly sx = g;
        for (int i = 0; i < params.M; ++i) {
            BiPoly sy = sx;
            for (int j = 0; j < params.N; ++j) {
                rows.push_back(bipoly_to_vec(fq, sy));
                sy = sy.shift_y();
            }
            sx = sx.shift_x();
        }
    }
    return rref(fq, std::move(rows)).rank;
}

std::optional<FqVec> solve_combination(const SubfieldCtx& fq, const FqMat& cols,
                                       const FqVec& target) {
    size_t n = target.size();
    size_t m = cols.size();
    FqMat aug(n, FqVec(m + 1, 0));
    for (size_t j = 0; j < m; ++j) {
        if (cols[j].size() != n) fail(Errc::InvalidArgument, "column length mismatch");
        for (size_t i = 0; i < n; ++i) aug[i][j] = cols[j][i];
    }
    for (size_t i = 0; i < n; ++i) aug[i][m] = target[i];
    Rref r = rref(fq, std::move(aug));
    FqVec sol(m, 0);
    for (int i = 0; i < r.rank; ++i) {
        if (r.pivots[(size_t)i] == (int)m) return std::nullopt;  // inconsistent
        sol[(size_t)r.pivots[i]] = r.rows[(size_t)i][m];
    }
    return sol;
}

}  // namespace bicycl
