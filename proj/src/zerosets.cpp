#include "bicycl/zerosets.hpp"

#include <algorithm>

namespace bicycl {

std::vector<ZeroPoint> V0Sets::points() const {
    std::vector<ZeroPoint> out;
    for (const auto& cls : classes) out.insert(out.end(), cls.begin(), cls.end());
    return out;
}

std::vector<ZeroPoint> EczProfile::points() const {
    std::vector<ZeroPoint> out;
    for (const auto& g : groups)
        for (const auto& eta : g.etas) out.push_back({g.xi, eta});
    return out;
}

int frobenius_period(const FieldElement& x) {
    return (int)frobenius_orbit(x, 1).size();
}

std::vector<FieldElement> binomial_roots(const FieldTower& F, int64_t M,
                                         const FieldElement& lambda) {
    if (lambda.is_zero()) fail(Errc::InvalidArgument, "lambda must be nonzero");
    int64_t S = (int64_t)F.group_order();
    int64_t A = lambda.exp;
    int64_t g = gcd_i64(M, S);
    std::vector<FieldElement> roots;
    if (A % g != 0) return roots;
    // kM = A (mod S) has g solutions k0 + t*(S/g).
    int64_t Sg = S / g;
    int64_t k0 = 0;
    if (Sg > 1) {
        int64_t Mg = (M / g) % Sg, r0 = Sg, r1 = Mg, s0 = 0, s1 = 1;
        while (r1) {
            int64_t qd = r0 / r1, r = r0 - qd * r1;
            r0 = r1;
            r1 = r;
            int64_t s = s0 - qd * s1;
            s0 = s1;
            s1 = s;
        }
        int64_t inv = ((s0 % Sg) + Sg) % Sg;
        k0 = (int64_t)((unsigned __int128)((A / g) % Sg) * (uint64_t)inv % (uint64_t)Sg);
    }
    for (int64_t t = 0; t < g; ++t) roots.push_back(F.alpha_pow(k0 + t * Sg));
    std::sort(roots.begin(), roots.end(),
              [](const FieldElement& u, const FieldElement& v) { return u.exp < v.exp; });
    return roots;
}

std::vector<ZeroPoint> full_variety(const CodeParams& params) {
    const FieldTower& F = *params.F();
    auto ra = binomial_roots(F, params.M, params.lambda1);
    auto rb = binomial_roots(F, params.N, params.lambda2);
    std::vector<ZeroPoint> out;
    out.reserve(ra.size() * rb.size());
    for (const auto& a : ra)
        for (const auto& b : rb) out.push_back({a, b});
    return out;
}

PointClasses classify_points(const CodeParams& params, std::vector<ZeroPoint> pts,
                             const FieldElement* anchor_first) {
    const FieldTower* F = params.F();
    auto key = [](const ZeroPoint& z) { return std::pair<int64_t, int64_t>(z.a.exp, z.b.exp); };
    std::sort(pts.begin(), pts.end(),
              [&](const ZeroPoint& u, const ZeroPoint& v) { return key(u) < key(v); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<bool> used(pts.size(), false);
    auto find = [&](const ZeroPoint& z) -> int {
        auto it = std::lower_bound(pts.begin(), pts.end(), z,
                                   [&](const ZeroPoint& u, const ZeroPoint& v) {
                                       return key(u) < key(v);
                                   });
        if (it == pts.end() || !(*it == z)) return -1;
        return (int)(it - pts.begin());
    };

    PointClasses out;
    for (size_t start = 0; start < pts.size(); ++start) {
        if (used[start]) continue;
        std::vector<ZeroPoint> cls;
        ZeroPoint cur = pts[start];
        while (true) {
            int idx = find(cur);
            if (idx < 0)
                fail(Errc::InvalidArgument, "point set is not closed under Frobenius");
            if (used[(size_t)idx]) break;
            used[(size_t)idx] = true;
            cls.push_back(cur);
            cur = {F->frobenius(cur.a, 1), F->frobenius(cur.b, 1)};
        }
        // Canonical representative: anchored first component when the class
        // meets it, otherwise the smallest first exponent; then the smallest
        // second exponent.
        int64_t first = -1;
        if (anchor_first) {
            for (const auto& z : cls)
                if (z.a == *anchor_first) { first = z.a.exp; break; }
        }
        if (first < 0) {
            first = cls[0].a.exp;
            for (const auto& z : cls) first = std::min(first, z.a.exp);
        }
        ZeroPoint rep{};
        bool have = false;
        for (const auto& z : cls)
            if (z.a.exp == first && (!have || z.b.exp < rep.b.exp)) {
                rep = z;
                have = true;
            }
        out.classes.push_back(std::move(cls));
        out.reps.push_back(rep);
    }
    // Order classes by their representative, (first exp, second exp) ascending.
    std::vector<size_t> order(out.classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t u, size_t v) {
        return key(out.reps[u]) < key(out.reps[v]);
    });
    PointClasses sorted;
    for (size_t i : order) {
        sorted.classes.push_back(std::move(out.classes[i]));
        sorted.reps.push_back(out.reps[i]);
    }
    return sorted;
}

V0Sets build_v0(const CodeParams& params, const FieldElement& gamma, const FieldElement& beta) {
    const FieldTower* F = params.F();
    auto check_root = [&](const FieldElement& r, int64_t n, const FieldElement& lambda,
                          const char* name) {
        if (r.is_zero() || !(F->pow(r, n) == lambda) ||
            F->multiplicative_order(r) != n * F->multiplicative_order(lambda))
            fail(Errc::InvalidRoot, std::string(name) + " is not a primitive root of lambda");
    };
    check_root(gamma, params.M, params.lambda1, "gamma");
    check_root(beta, params.N, params.lambda2, "beta");

    V0Sets v0;
    v0.params = params;
    v0.gamma = gamma;
    v0.beta = beta;
    v0.z1 = frobenius_period(gamma);
    v0.z2 = frobenius_period(beta);
    std::vector<ZeroPoint> pts;
    FieldElement a = gamma;
    for (int i = 0; i < v0.z1; ++i) {
        FieldElement b = beta;
        for (int j = 0; j < v0.z2; ++j) {
            pts.push_back({a, b});
            b = F->frobenius(b, 1);
        }
        a = F->frobenius(a, 1);
    }
    PointClasses pc = classify_points(params, std::move(pts), &gamma);
    v0.classes = std::move(pc.classes);
    v0.reps = std::move(pc.reps);
    return v0;
}

CzSets cz_from_generators(const std::vector<BiPoly>& generators, const V0Sets& v0) {
    if (generators.empty()) fail(Errc::InvalidArgument, "no generators");
    for (const auto& g : generators) {
        if (!g.params().same(v0.params)) fail(Errc::ParamMismatch, "generator ring mismatch");
        g.require_base_field("generator");
    }
    CzSets cz;
    for (size_t ci = 0; ci < v0.classes.size(); ++ci) {
        const auto& cls = v0.classes[ci];
        int vanish_count = 0;
        for (const auto& z : cls) {
            bool all = true;
            for (const auto& g : generators)
                if (!g.eval(z.a, z.b).is_zero()) { all = false; break; }
            if (all) ++vanish_count;
        }
        if (vanish_count != 0 && vanish_count != (int)cls.size())
            fail(Errc::OracleDisagreement,
                 "vanishing set is not Frobenius-closed; generators must be over F_q");
        if (vanish_count == (int)cls.size()) {
            cz.class_idx.push_back((int)ci);
            cz.vc.insert(cz.vc.end(), cls.begin(), cls.end());
            cz.ecz.push_back(v0.reps[ci]);
        }
    }
    return cz;
}

EczProfile profile_from_ecz(const CodeParams& params, std::vector<ZeroPoint> ecz,
                            const FieldElement& gamma, const FieldElement& beta) {
    const FieldTower* F = params.F();
    EczProfile prof;
    prof.params = params;
    prof.gamma = gamma;
    prof.beta = beta;
    prof.z1 = frobenius_period(gamma);
    prof.z2 = frobenius_period(beta);

    for (const auto& z : ecz) {
        if (!(F->pow(z.a, params.M) == params.lambda1) ||
            !(F->pow(z.b, params.N) == params.lambda2))
            fail(Errc::InvalidRoot, "ECZ point is not a common binomial root");
    }
    std::sort(ecz.begin(), ecz.end(), [](const ZeroPoint& u, const ZeroPoint& v) {
        return std::pair(u.a.exp, u.b.exp) < std::pair(v.a.exp, v.b.exp);
    });

    for (const auto& z : ecz) {
        if (prof.groups.empty() || !(prof.groups.back().xi == z.a)) {
            EczGroup g;
            g.xi = z.a;
            prof.groups.push_back(std::move(g));
        }
        auto& g = prof.groups.back();
        for (const auto& prev : g.etas)
            if (prev == z.b) fail(Errc::InvalidArgument, "duplicate ECZ point");
        g.etas.push_back(z.b);
    }

    // First components pairwise non-conjugate over F_q.
    for (size_t i = 0; i < prof.groups.size(); ++i) {
        auto orbit = frobenius_orbit(prof.groups[i].xi, 1);
        for (size_t j = i + 1; j < prof.groups.size(); ++j)
            for (const auto& c : orbit)
                if (c == prof.groups[j].xi)
                    fail(Errc::ConjugateFirstComponents,
                         "distinct first components " + F->to_string(prof.groups[i].xi) +
                             " and " + F->to_string(prof.groups[j].xi) + " are conjugate");
    }

    prof.d = 0;
    for (auto& g : prof.groups) {
        g.g_xi = minimal_polynomial(g.xi, 1);
        g.m = g.g_xi.degree();
        g.g_eta = UniPoly({F->one()});
        g.n = 0;
        for (size_t j = 0; j < g.etas.size(); ++j) {
            // Second components within a group must be pairwise non-conjugate
            // over F_{q^m}.
            auto orbit = frobenius_orbit(g.etas[j], g.m);
            for (size_t k = j + 1; k < g.etas.size(); ++k)
                for (const auto& c : orbit)
                    if (c == g.etas[k])
                        fail(Errc::InvalidArgument,
                             "second components are conjugate over F_{q^m}");
            UniPoly mj = minimal_polynomial(g.etas[j], g.m);
            g.n_ij.push_back(mj.degree());
            g.n += mj.degree();
            g.g_eta = g.g_eta * mj;
            g.eta_min_polys.push_back(std::move(mj));
        }
        prof.d += g.m * g.n;
    }
    return prof;
}

}  // namespace bicycl
