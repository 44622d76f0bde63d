#include "bicycl/idealbasis.hpp"

#include <algorithm>

namespace bicycl {

BiPoly lift_to_bivariate(const UniPoly& G, const FieldElement& xi, int m,
                         const CodeParams& params) {
    const FieldTower* F = params.F();
    std::vector<FieldElement> powers;
    FieldElement x = F->one();
    for (int j = 0; j < m; ++j) {
        powers.push_back(x);
        x = F->mul(x, xi);
    }
    std::vector<Term> terms;
    for (int k = 0; k <= G.degree(); ++k) {
        FieldElement ck = G.coeff(k);
        if (ck.is_zero()) continue;
        auto coords = F->coords_over_basis(ck, powers);
        for (int j = 0; j < m; ++j)
            if (!coords[(size_t)j].is_zero()) terms.push_back({j, k, coords[(size_t)j]});
    }
    BiPoly out = BiPoly::reduce(params, terms);
    out.require_base_field("lifted polynomial");
    return out;
}

IdealBasis build_basis(const EczProfile& profile, bool prune) {
    const CodeParams& P = profile.params;
    const FieldTower* F = P.F();
    const auto& groups = profile.groups;
    int s = profile.s();

    std::vector<BiPoly> gxi_ring;  // g_{xi j}(x) as ring elements
    for (const auto& g : groups) gxi_ring.push_back(BiPoly::from_unipoly_x(P, g.g_xi));

    IdealBasis out;
    std::vector<BiPoly> members;
    for (int i = 0; i < s; ++i) {
        BiPoly f = lift_to_bivariate(groups[(size_t)i].g_eta, groups[(size_t)i].xi,
                                     groups[(size_t)i].m, P);
        std::vector<BiPoly> chain{f};
        for (int k = i + 1; k < s; ++k) {
            const auto& gk = groups[(size_t)k];
            UniPoly rem = UniPoly::divmod(f.eval_x(gk.xi), gk.g_eta).second;
            FieldElement scalar = F->one();
            for (int j = i; j < k; ++j)
                scalar = F->mul(scalar, groups[(size_t)j].g_xi.eval(gk.xi));
            BiPoly rk = lift_to_bivariate(rem.scaled(F->inv(scalar)), gk.xi, gk.m, P);
            BiPoly prod(P);
            prod = BiPoly::monomial(P, 0, 0, F->one());
            for (int j = i; j < k; ++j) prod = prod * gxi_ring[(size_t)j];
            f = f - rk * prod;
            chain.push_back(f);
        }
        BiPoly gi = f;
        for (int j = 0; j < i; ++j) gi = gi * gxi_ring[(size_t)j];
        gi.require_base_field("basis member");
        members.push_back(gi);
        out.chains.push_back(std::move(chain));
    }
    BiPoly last = BiPoly::monomial(P, 0, 0, F->one());
    for (int j = 0; j < s; ++j) last = last * gxi_ring[(size_t)j];
    members.push_back(last);

    for (int i = 0; i < (int)members.size(); ++i) {
        if (members[(size_t)i].is_zero()) continue;
        out.polys.push_back(members[(size_t)i]);
        out.labels.push_back(i + 1);
    }

    if (prune && out.polys.size() > 1) {
        int full_dim = ideal_dimension(out.polys, P);
        for (int i = (int)out.polys.size() - 1; i >= 0 && out.polys.size() > 1; --i) {
            std::vector<BiPoly> rest;
            for (int j = 0; j < (int)out.polys.size(); ++j)
                if (j != i) rest.push_back(out.polys[(size_t)j]);
            if (ideal_dimension(rest, P) == full_dim) {
                out.polys.erase(out.polys.begin() + i);
                out.labels.erase(out.labels.begin() + i);
            }
        }
    }
    return out;
}

BasisReport verify_basis(const IdealBasis& basis, const std::vector<ZeroPoint>& vc,
                         const V0Sets& v0) {
    const CodeParams& P = v0.params;
    BasisReport rep;
    for (size_t gi = 0; gi < basis.polys.size(); ++gi)
        for (const auto& z : vc)
            if (!basis.polys[gi].eval(z.a, z.b).is_zero())
                fail(Errc::VerificationFailed,
                     "basis member " + std::to_string(gi + 1) + " does not vanish at (" +
                         P.F()->to_string(z.a) + ", " + P.F()->to_string(z.b) + ")");

    rep.ideal_dim = ideal_dimension(basis.polys, P);
    rep.expected_dim = P.area() - (int)vc.size();
    if (rep.ideal_dim != rep.expected_dim)
        fail(Errc::VerificationFailed,
             "ideal dimension " + std::to_string(rep.ideal_dim) + " != expected " +
                 std::to_string(rep.expected_dim));

    auto in_vc = [&](const ZeroPoint& z) {
        return std::find(vc.begin(), vc.end(), z) != vc.end();
    };
    for (const auto& r : v0.reps) {
        if (in_vc(r)) continue;
        std::vector<int> vanishers;
        for (size_t gi = 0; gi < basis.polys.size(); ++gi)
            if (basis.polys[gi].eval(r.a, r.b).is_zero()) vanishers.push_back((int)gi + 1);
        if (!vanishers.empty()) rep.extra_vanishing.push_back({r, vanishers});
    }
    return rep;
}

}  // namespace bicycl
