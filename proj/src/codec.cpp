#include "bicycl/codec.hpp"

#include <algorithm>

namespace bicycl {

namespace {

CodeHandle assemble(const CodeParams& params, const FieldElement& gamma,
                    const FieldElement& beta, V0Sets v0, std::vector<ZeroPoint> vc,
                    std::vector<ZeroPoint> ecz, const CodeOptions& options) {
    CodeHandle code;
    code.params = params;
    code.gamma = gamma;
    code.beta = beta;
    code.v0 = std::move(v0);
    code.vc = std::move(vc);
    code.ecz = std::move(ecz);
    code.options = options;
    code.profile = profile_from_ecz(params, code.ecz, gamma, beta);
    if (code.profile.d != (int)code.vc.size())
        fail(Errc::OracleDisagreement,
             "profile size " + std::to_string(code.profile.d) + " != |Vc| " +
                 std::to_string(code.vc.size()));
    code.H = build_check_tensor(code.profile);
    select_check_positions(code.H, options.pi_strategy);
    code.G = build_generator_tensor(code.H);
    code.K = params.area() - (int)code.vc.size();
    return code;
}

}  // namespace

CodeHandle make_code_from_ecz(const CodeParams& params, const FieldElement& gamma,
                              const FieldElement& beta, const std::vector<ZeroPoint>& ecz,
                              const CodeOptions& options) {
    V0Sets v0 = build_v0(params, gamma, beta);
    // Expand the ECZ points into their joint conjugate classes to obtain Vc.
    std::vector<ZeroPoint> vc;
    const FieldTower* F = params.F();
    for (const auto& z : ecz) {
        ZeroPoint cur = z;
        do {
            vc.push_back(cur);
            cur = {F->frobenius(cur.a, 1), F->frobenius(cur.b, 1)};
        } while (!(cur == z));
    }
    std::sort(vc.begin(), vc.end(), [](const ZeroPoint& u, const ZeroPoint& v) {
        return std::pair(u.a.exp, u.b.exp) < std::pair(v.a.exp, v.b.exp);
    });
    auto dup = std::adjacent_find(vc.begin(), vc.end());
    if (dup != vc.end()) fail(Errc::InvalidArgument, "ECZ points share a conjugate class");
    return assemble(params, gamma, beta, std::move(v0), std::move(vc), ecz, options);
}

CodeHandle make_code_from_generators(const CodeParams& params, const FieldElement& gamma,
                                     const FieldElement& beta,
                                     const std::vector<BiPoly>& generators,
                                     const CodeOptions& options) {
    V0Sets v0 = build_v0(params, gamma, beta);
    CzSets cz = cz_from_generators(generators, v0);
    CodeHandle code = assemble(params, gamma, beta, std::move(v0), std::move(cz.vc),
                               std::move(cz.ecz), options);
    code.generators = generators;
    return code;
}

CodeHandle make_code_full_variety(const CodeParams& params, const FieldElement& gamma,
                                  const FieldElement& beta,
                                  const std::vector<BiPoly>& generators,
                                  const CodeOptions& options) {
    for (const auto& g : generators) g.require_base_field("generator");
    std::vector<ZeroPoint> zeros;
    for (const auto& z : full_variety(params)) {
        bool all = true;
        for (const auto& g : generators)
            if (!g.eval(z.a, z.b).is_zero()) { all = false; break; }
        if (all) zeros.push_back(z);
    }
    PointClasses pc = classify_points(params, zeros, &gamma);
    std::vector<ZeroPoint> vc;
    for (const auto& cls : pc.classes) vc.insert(vc.end(), cls.begin(), cls.end());
    V0Sets v0 = build_v0(params, gamma, beta);
    CodeHandle code = assemble(params, gamma, beta, std::move(v0), std::move(vc),
                               std::move(pc.reps), options);
    code.generators = generators;
    return code;
}

BiPoly encode(const CodeHandle& code, const BiPoly& message) {
    const CodeParams& P = code.params;
    if (!message.params().same(P)) fail(Errc::ParamMismatch, "message ring mismatch");
    message.require_base_field("message");
    for (auto [k, l] : code.H.pi)
        if (!message.at(k, l).is_zero())
            fail(Errc::NonzeroParityInput, "message symbol at check position (" +
                                               std::to_string(k) + "," + std::to_string(l) +
                                               ") must be zero");
    BiPoly c(P);
    for (int i = 0; i < P.M; ++i)
        for (int j = 0; j < P.N; ++j) {
            const FieldElement& m = message.at(i, j);
            if (m.is_zero()) continue;
            c = c + code.G.g_polys[(size_t)i * P.N + j].scaled(m);
        }
    // Systematic and zero-syndrome by construction; check both.
    for (int i = 0; i < P.M; ++i)
        for (int j = 0; j < P.N; ++j)
            if (!code.H.in_pi(i, j) && !(c.at(i, j) == message.at(i, j)))
                fail(Errc::OracleDisagreement, "encoding is not systematic");
    for (uint8_t v : code.H.syndrome(c))
        if (v) fail(Errc::OracleDisagreement, "encoded word has nonzero syndrome");
    return c;
}

FqVec syndrome(const CodeHandle& code, const BiPoly& c) { return code.H.syndrome(c); }

bool is_codeword(const CodeHandle& code, const BiPoly& c, MembershipMode mode) {
    bool by_syndrome = false, by_vanishing = false;
    if (mode == MembershipMode::Syndrome || mode == MembershipMode::Both) {
        by_syndrome = true;
        for (uint8_t v : code.H.syndrome(c))
            if (v) { by_syndrome = false; break; }
        if (mode == MembershipMode::Syndrome) return by_syndrome;
    }
    if (mode == MembershipMode::Vanishing || mode == MembershipMode::Both) {
        c.require_base_field("array");
        by_vanishing = true;
        for (const auto& z : code.ecz)
            if (!c.eval(z.a, z.b).is_zero()) { by_vanishing = false; break; }
        if (mode == MembershipMode::Vanishing) return by_vanishing;
    }
    if (by_syndrome != by_vanishing)
        fail(Errc::OracleDisagreement, "syndrome and vanishing tests disagree");
    return by_syndrome;
}

FqMat codeword_basis(const CodeHandle& code) {
    return left_nullspace(code.H.fq, code.H.h);
}

namespace {

// Enumerate the span of basis over F_q, invoking fn on every vector
// including zero. Deltas keep the walk incremental.
template <typename Fn>
void walk_span(const SubfieldCtx& fq, const FqMat& basis, Fn&& fn) {
    size_t K = basis.size();
    if (K == 0) {
        fn(FqVec());
        return;
    }
    size_t n = basis[0].size();
    int q = fq.q;
    // delta[i][v] moves digit i from element v to v+1 (wrapping at q-1).
    std::vector<std::vector<FqVec>> delta(K, std::vector<FqVec>((size_t)q));
    for (size_t i = 0; i < K; ++i)
        for (int v = 0; v < q; ++v) {
            uint8_t from = (uint8_t)v, to = (uint8_t)((v + 1) % q);
            uint8_t step = fq.add(to, fq.neg(from));
            FqVec dv(n);
            for (size_t t = 0; t < n; ++t) dv[t] = fq.mul(step, basis[i][t]);
            delta[i][(size_t)v] = std::move(dv);
        }
    std::vector<int> digits(K, 0);
    FqVec cur(n, 0);
    while (true) {
        fn(cur);
        size_t i = 0;
        while (i < K) {
            const FqVec& dv = delta[i][(size_t)digits[i]];
            for (size_t t = 0; t < n; ++t) cur[t] = fq.add(cur[t], dv[t]);
            digits[i] = (digits[i] + 1) % q;
            if (digits[i] != 0) break;
            ++i;
        }
        if (i == K) break;
    }
}

uint64_t checked_pow(uint64_t base, int exp, uint64_t cap) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

std::vector<FqVec> enumerate_codewords(const CodeHandle& code) {
    std::vector<FqVec> out;
    for_each_codeword(code, [&](const FqVec& v) { out.push_back(v); });
    return out;
}

void for_each_codeword(const CodeHandle& code, const std::function<void(const FqVec&)>& fn) {
    FqMat basis = codeword_basis(code);
    uint64_t total = checked_pow(code.params.q(), (int)basis.size(), code.options.dmin_cap);
    if (total > code.options.dmin_cap)
        fail(Errc::CapExceeded, "codeword enumeration exceeds the configured cap");
    walk_span(code.H.fq, basis, fn);
}

CodeParameters compute_parameters(const CodeHandle& code) {
    CodeParameters out;
    out.area = code.params.area();
    FqMat basis = codeword_basis(code);
    out.K = (int)basis.size();
    if (out.K != code.K)
        fail(Errc::OracleDisagreement, "null-space dimension disagrees with MN - |Vc|");
    if (out.K == 0) {
        out.dmin_note = "zero code";
        return out;
    }
    uint64_t total = checked_pow(code.params.q(), out.K, code.options.dmin_cap);
    if (total > code.options.dmin_cap) {
        out.dmin_note = "not computed: q^K exceeds the enumeration cap";
        return out;
    }
    int best = out.area + 1;
    walk_span(code.H.fq, basis, [&](const FqVec& v) {
        int w = 0;
        for (uint8_t x : v)
            if (x) ++w;
        if (w > 0 && w < best) best = w;
    });
    out.dmin = best;
    return out;
}

CodeHandle dual_code(const CodeHandle& code) {
    const CodeParams& P = code.params;
    const FieldTower* F = P.F();
    CodeParams dp(P.tower, P.M, P.N, F->inv(P.lambda1), F->inv(P.lambda2));
    FieldElement dgamma = F->inv(code.gamma);
    FieldElement dbeta = F->inv(code.beta);

    std::vector<ZeroPoint> inv_vc;
    inv_vc.reserve(code.vc.size());
    for (const auto& z : code.vc) inv_vc.push_back({F->inv(z.a), F->inv(z.b)});
    auto key = [](const ZeroPoint& z) { return std::pair(z.a.exp, z.b.exp); };
    std::sort(inv_vc.begin(), inv_vc.end(),
              [&](const ZeroPoint& u, const ZeroPoint& v) { return key(u) < key(v); });

    std::vector<ZeroPoint> dual_vc;
    for (const auto& z : full_variety(dp)) {
        auto it = std::lower_bound(inv_vc.begin(), inv_vc.end(), z,
                                   [&](const ZeroPoint& u, const ZeroPoint& v) {
                                       return key(u) < key(v);
                                   });
        if (it == inv_vc.end() || !(*it == z)) dual_vc.push_back(z);
    }
    PointClasses pc = classify_points(dp, dual_vc, &dgamma);
    std::vector<ZeroPoint> vc_sorted;
    for (const auto& cls : pc.classes) vc_sorted.insert(vc_sorted.end(), cls.begin(), cls.end());
    V0Sets v0 = build_v0(dp, dgamma, dbeta);
    CodeHandle dual = assemble(dp, dgamma, dbeta, std::move(v0), std::move(vc_sorted),
                               std::move(pc.reps), code.options);
    if (dual.K != P.area() - code.K)
        fail(Errc::OracleDisagreement, "dual dimension does not complement the primal");
    return dual;
}

std::vector<FqVec> brute_force_ideal_oracle(const CodeParams& params,
                                            const std::vector<BiPoly>& generators,
                                            uint64_t cap) {
    uint64_t total = checked_pow(params.q(), params.area(), cap);
    if (total > cap) fail(Errc::CapExceeded, "q^(MN) exceeds the oracle cap");
    SubfieldCtx fq(params.F());

    // Ideal closure of the generators under addition and both shifts is the
    // span of all monomial shifts.
    FqMat rows;
    for (const auto& g : generators) {
        if (!g.params().same(params)) fail(Errc::ParamMismatch, "ring mismatch");
        g.require_base_field("generator");
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
    Rref closure = rref(fq, std::move(rows));

    std::vector<FqVec> kept;
    size_t n = (size_t)params.area();
    FqVec cur(n, 0);
    while (true) {
        if (in_row_space(fq, closure, cur)) kept.push_back(cur);
        size_t i = 0;
        while (i < n) {
            cur[i] = (uint8_t)((cur[i] + 1) % fq.q);
            if (cur[i] != 0) break;
            ++i;
        }
        if (i == n) break;
    }
    return kept;
}

}  // namespace bicycl
