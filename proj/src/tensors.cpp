#include "bicycl/tensors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bicycl {

FqVec CheckTensor::syndrome(const BiPoly& c) const {
    const CodeParams& P = params();
    if (!c.params().same(P)) fail(Errc::ParamMismatch, "ring mismatch");
    c.require_base_field("array");
    FqVec s((size_t)d, 0);
    for (int k = 0; k < P.M; ++k)
        for (int l = 0; l < P.N; ++l) {
            uint8_t ckl = fq.index_of(c.at(k, l));
            if (ckl == 0) continue;
            const FqVec& row = h_at(k, l);
            for (int t = 0; t < d; ++t)
                s[(size_t)t] = fq.add(s[(size_t)t], fq.mul(ckl, row[(size_t)t]));
        }
    return s;
}

std::string CheckTensor::h_string(int k, int l) const {
    const FieldTower* F = params().F();
    const FqVec& row = h_at(k, l);
    std::ostringstream os;
    bool digits = F->e() == 1 && F->p() <= 9;
    for (size_t t = 0; t < row.size(); ++t) {
        const FieldElement& x = fq.elem(row[t]);
        if (digits)
            os << F->prime_digit(x);
        else
            os << (t ? " " : "") << element_token(*F, x);
    }
    return os.str();
}

CheckTensor build_check_tensor(const EczProfile& profile) {
    const CodeParams& P = profile.params;
    const FieldTower* F = P.F();
    CheckTensor H;
    H.profile = profile;
    H.fq = SubfieldCtx(F);
    H.d = profile.d;

    int offset = 0;
    for (int gi = 0; gi < profile.s(); ++gi) {
        const EczGroup& g = profile.groups[(size_t)gi];
        for (int ej = 0; ej < (int)g.etas.size(); ++ej) {
            TensorBlock b;
            b.group = gi;
            b.eta_idx = ej;
            b.offset = offset;
            b.width = g.m * g.n_ij[(size_t)ej];
            FieldElement gen = F->subfield_generator(b.width);
            FieldElement pw = F->one();
            for (int t = 0; t < b.width; ++t) {
                b.basis.push_back(pw);
                pw = F->mul(pw, gen);
            }
            offset += b.width;
            H.blocks.push_back(std::move(b));
        }
    }
    if (offset != H.d) fail(Errc::OracleDisagreement, "block widths do not sum to d");

    H.h.assign((size_t)P.area(), FqVec((size_t)H.d, 0));
    for (const auto& b : H.blocks) {
        const EczGroup& g = profile.groups[(size_t)b.group];
        const FieldElement& xi = g.xi;
        const FieldElement& eta = g.etas[(size_t)b.eta_idx];
        FieldElement xk = F->one();
        for (int k = 0; k < P.M; ++k) {
            FieldElement val = xk;
            for (int l = 0; l < P.N; ++l) {
                auto coords = F->coords_over_basis(val, b.basis);
                FqVec& row = H.h[(size_t)k * P.N + l];
                for (int t = 0; t < b.width; ++t)
                    row[(size_t)(b.offset + t)] = H.fq.index_of(coords[(size_t)t]);
                val = F->mul(val, eta);
            }
            xk = F->mul(xk, xi);
        }
    }
    return H;
}

namespace {

bool independent_on(const CheckTensor& H, const std::vector<std::pair<int, int>>& pos) {
    FqMat rows;
    rows.reserve(pos.size());
    for (auto [k, l] : pos) rows.push_back(H.h_at(k, l));
    return rref(H.fq, std::move(rows)).rank == H.d;
}

std::vector<std::pair<int, int>> staircase_positions(const CheckTensor& H) {
    const auto& groups = H.profile.groups;
    std::vector<int> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return groups[(size_t)u].n > groups[(size_t)v].n; });
    std::vector<std::pair<int, int>> pos;
    int row0 = 0;
    for (int gi : order) {
        for (int k = row0; k < row0 + groups[(size_t)gi].m; ++k)
            for (int l = 0; l < groups[(size_t)gi].n; ++l) pos.push_back({k, l});
        row0 += groups[(size_t)gi].m;
    }
    std::sort(pos.begin(), pos.end());
    return pos;
}

std::vector<std::pair<int, int>> greedy_positions(const CheckTensor& H) {
    const CodeParams& P = H.params();
    std::vector<std::pair<int, int>> pos;
    FqMat rows;
    int rank = 0;
    for (int k = 0; k < P.M && rank < H.d; ++k)
        for (int l = 0; l < P.N && rank < H.d; ++l) {
            rows.push_back(H.h_at(k, l));
            Rref r = rref(H.fq, rows);
            if (r.rank > rank) {
                rank = r.rank;
                pos.push_back({k, l});
            } else {
                rows.pop_back();
            }
        }
    return pos;
}

}  // namespace

void select_check_positions(CheckTensor& H, const std::string& strategy) {
    const CodeParams& P = H.params();
    if (strategy != "staircase" && strategy != "greedy")
        fail(Errc::InvalidArgument, "unknown check-position strategy: " + strategy);
    std::vector<std::pair<int, int>> pos;
    std::string used;
    if (strategy == "staircase") {
        pos = staircase_positions(H);
        used = "staircase";
        if (!independent_on(H, pos)) {
            pos.clear();
            used = "greedy";
        }
    }
    if (pos.empty() && H.d > 0) {
        pos = greedy_positions(H);
        used = "greedy";
        if ((int)pos.size() != H.d || !independent_on(H, pos))
            fail(Errc::RankDeficient, "could not find d independent check positions");
    }
    if (H.d == 0) used = strategy;
    H.pi = std::move(pos);
    H.pi_strategy = used;
    H.pi_mask.assign((size_t)P.area(), 0);
    for (auto [k, l] : H.pi) H.pi_mask[(size_t)k * P.N + l] = 1;
}

std::vector<BiPoly> express_h_polys(const CheckTensor& H) {
    const CodeParams& P = H.params();
    const FieldTower* F = P.F();
    if (H.pi_mask.empty()) fail(Errc::InvalidArgument, "check positions not selected");
    FqMat cols;
    cols.reserve(H.pi.size());
    for (auto [k, l] : H.pi) cols.push_back(H.h_at(k, l));
    std::vector<BiPoly> out;
    out.reserve((size_t)P.area());
    for (int i = 0; i < P.M; ++i)
        for (int j = 0; j < P.N; ++j) {
            if (H.in_pi(i, j)) {
                out.push_back(BiPoly::monomial(P, i, j, F->one()));
                continue;
            }
            auto sol = solve_combination(H.fq, cols, H.h_at(i, j));
            if (!sol) fail(Errc::RankDeficient, "check positions do not span the h vectors");
            std::vector<Term> terms;
            for (size_t t = 0; t < H.pi.size(); ++t)
                if ((*sol)[t])
                    terms.push_back({H.pi[t].first, H.pi[t].second, H.fq.elem((*sol)[t])});
            out.push_back(BiPoly::reduce(P, terms));
        }
    return out;
}

GeneratorTensor build_generator_tensor(const CheckTensor& H) {
    const CodeParams& P = H.params();
    const FieldTower* F = P.F();
    GeneratorTensor G;
    G.h_polys = express_h_polys(H);
    G.g_polys.reserve(G.h_polys.size());
    for (int i = 0; i < P.M; ++i)
        for (int j = 0; j < P.N; ++j) {
            const BiPoly& hp = G.h_polys[(size_t)i * P.N + j];
            BiPoly g = BiPoly::monomial(P, i, j, F->one()) - hp;
            // Zero syndrome is the defining property of a generator row.
            FqVec s = H.syndrome(g);
            for (uint8_t v : s)
                if (v) fail(Errc::OracleDisagreement, "generator tensor entry has nonzero syndrome");
            G.g_polys.push_back(std::move(g));
        }
    return G;
}

}  // namespace bicycl
