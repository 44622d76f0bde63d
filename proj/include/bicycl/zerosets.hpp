#pragma once

#include <vector>

#include "bicycl/bipoly.hpp"

namespace bicycl {

// Common root pair of x^M - lambda1 and y^N - lambda2.
struct ZeroPoint {
    FieldElement a, b;
};

inline bool operator==(const ZeroPoint& u, const ZeroPoint& v) {
    return u.a == v.a && u.b == v.b;
}

// The joint Frobenius-orbit set V0 of (gamma, beta) together with its
// conjugate-class decomposition and canonical class representatives.
struct V0Sets {
    CodeParams params;
    FieldElement gamma, beta;
    int z1 = 0, z2 = 0;  // Frobenius periods of gamma and beta
    std::vector<std::vector<ZeroPoint>> classes;
    std::vector<ZeroPoint> reps;  // one per class, first component gamma

    std::vector<ZeroPoint> points() const;
    size_t size() const { return (size_t)z1 * (size_t)z2; }
};

struct CzSets {
    std::vector<int> class_idx;   // classes of V0 on which every generator vanishes
    std::vector<ZeroPoint> vc;    // CZ set
    std::vector<ZeroPoint> ecz;   // ECZ set
};

// ECZ set grouped by first components, with minimal-polynomial bookkeeping.
struct EczGroup {
    FieldElement xi;
    int m = 0;        // deg of minimal polynomial of xi over F_q
    UniPoly g_xi;     // that minimal polynomial (in x)
    std::vector<FieldElement> etas;
    std::vector<UniPoly> eta_min_polys;  // M_{i,j}(y) over F_{q^m}
    std::vector<int> n_ij;
    UniPoly g_eta;    // product of the M_{i,j}
    int n = 0;        // sum of n_ij = deg g_eta
};

struct EczProfile {
    CodeParams params;
    FieldElement gamma, beta;
    int z1 = 0, z2 = 0;
    std::vector<EczGroup> groups;
    int d = 0;  // sum of m_i * n_i

    int s() const { return (int)groups.size(); }
    std::vector<ZeroPoint> points() const;
};

// All roots of x^M = lambda in the ambient field, ascending alpha-exponent.
std::vector<FieldElement> binomial_roots(const FieldTower& F, int64_t M,
                                         const FieldElement& lambda);

// The full common-root variety of the two binomials (diagnostic; V0 below
// is the orbit set actually used by the construction).
std::vector<ZeroPoint> full_variety(const CodeParams& params);

V0Sets build_v0(const CodeParams& params, const FieldElement& gamma, const FieldElement& beta);

// Points of V0 at which every generator vanishes; generators must have
// base-field coefficients, which keeps the result Frobenius-closed.
CzSets cz_from_generators(const std::vector<BiPoly>& generators, const V0Sets& v0);

EczProfile profile_from_ecz(const CodeParams& params, std::vector<ZeroPoint> ecz,
                            const FieldElement& gamma, const FieldElement& beta);

// Decompose a Frobenius-closed point set into joint conjugate classes with
// canonical representatives (anchor-first-component preferred, else the
// smallest alpha-exponent).
struct PointClasses {
    std::vector<std::vector<ZeroPoint>> classes;
    std::vector<ZeroPoint> reps;
};
PointClasses classify_points(const CodeParams& params, std::vector<ZeroPoint> pts,
                             const FieldElement* anchor_first);

int frobenius_period(const FieldElement& x);

}  // namespace bicycl
