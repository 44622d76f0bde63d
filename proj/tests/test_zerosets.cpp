#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_util.hpp"

using namespace bicycl;
using testutil::f81a;
using testutil::f81b;

namespace {

std::set<std::pair<int64_t, int64_t>> as_set(const std::vector<ZeroPoint>& pts) {
    std::set<std::pair<int64_t, int64_t>> s;
    for (const auto& z : pts) s.insert({z.a.exp, z.b.exp});
    return s;
}

}  // namespace

TEST_CASE("V0 of the 10x8 example") {
    auto t = f81b();
    CodeParams P = testutil::params_10x8(t);
    FieldElement gamma = t->alpha_pow(4), beta = t->alpha_pow(5);
    V0Sets v0 = build_v0(P, gamma, beta);
    CHECK(v0.z1 == 4);
    CHECK(v0.z2 == 4);
    CHECK(v0.size() == 16);
    CHECK(v0.points().size() == 16);

    // V0hat = {(g,b), (g,b^3), (g,2b), (g,2b^3)} in canonical order
    REQUIRE(v0.reps.size() == 4);
    std::vector<int64_t> second;
    for (const auto& r : v0.reps) {
        CHECK(r.a == gamma);
        second.push_back(r.b.exp);
    }
    CHECK(second == std::vector<int64_t>{5, 15, 45, 55});

    // the sixteen printed points, via the power/scalar forms of the paper
    FieldElement two = t->from_prime_scalar(2);
    auto pw = [&](const FieldElement& x, int64_t n) { return fe_pow(x, n); };
    std::vector<ZeroPoint> printed = {
        {gamma, beta},            {pw(gamma, 3), pw(beta, 3)}, {pw(gamma, 9), two * beta},
        {pw(gamma, 7), two * pw(beta, 3)},
        {gamma, pw(beta, 3)},     {pw(gamma, 3), two * beta},  {pw(gamma, 9), two * pw(beta, 3)},
        {pw(gamma, 7), beta},
        {gamma, two * beta},      {pw(gamma, 3), two * pw(beta, 3)}, {pw(gamma, 9), beta},
        {pw(gamma, 7), pw(beta, 3)},
        {gamma, two * pw(beta, 3)}, {pw(gamma, 3), beta},      {pw(gamma, 9), pw(beta, 3)},
        {pw(gamma, 7), two * beta}};
    CHECK(as_set(v0.points()) == as_set(printed));

    // V0 is the disjoint union of its conjugate classes
    size_t total = 0;
    std::set<std::pair<int64_t, int64_t>> seen;
    for (const auto& cls : v0.classes) {
        total += cls.size();
        for (const auto& z : cls) CHECK(seen.insert({z.a.exp, z.b.exp}).second);
    }
    CHECK(total == v0.size());
}

TEST_CASE("conjugate sets of the 4x5 example") {
    auto t = f81a();
    FieldElement gamma = t->alpha_pow(10), beta = t->alpha_pow(8);
    // conjugate set of gamma = {gamma, gamma^3}; of beta = {b, b^3, 2b^4, 2b^2}
    auto cg = frobenius_orbit(gamma, 1);
    CHECK(cg.size() == 2);
    CHECK(cg[1] == fe_pow(gamma, 3));
    auto cb = frobenius_orbit(beta, 1);
    REQUIRE(cb.size() == 4);
    FieldElement two = t->from_prime_scalar(2);
    CHECK(cb[1] == fe_pow(beta, 3));
    CHECK(cb[2] == two * fe_pow(beta, 4));
    CHECK(cb[3] == two * fe_pow(beta, 2));

    CodeParams P = testutil::params_4x5(t, 2);
    V0Sets v0 = build_v0(P, gamma, beta);
    CHECK(v0.z1 == 2);
    CHECK(v0.z2 == 4);
    CHECK(v0.size() == 8);
    REQUIRE(v0.reps.size() == 2);
    CHECK(v0.reps[0].a == gamma);
    CHECK(v0.reps[0].b == beta);
    CHECK(v0.reps[1].a == gamma);
    CHECK(v0.reps[1].b == fe_pow(beta, 3));
}

TEST_CASE("degenerate 1x1 zero set") {
    auto t = f81a();
    CodeParams P(t, 1, 1, t->one(), t->one());
    V0Sets v0 = build_v0(P, t->one(), t->one());
    CHECK(v0.size() == 1);
    CHECK(v0.reps.size() == 1);
    CHECK(v0.reps[0].a == t->one());
}

TEST_CASE("invalid roots are rejected") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    // alpha^12 is a conjugate of gamma but not the smallest; it is still a
    // primitive root, so it is accepted.
    CHECK_NOTHROW(build_v0(P, t->alpha_pow(12), t->alpha_pow(5)));
    // alpha^8 has gamma^10 = 2 false
    CHECK_THROWS_WITH_AS(build_v0(P, t->alpha_pow(8), t->alpha_pow(5)),
                         doctest::Contains("InvalidRoot"), Error);
    // alpha^20 solves x^10 = 2? (20*10 = 200 = 40 mod 80 -> yes) but has
    // order 4 != 20, so it is not primitive.
    CHECK_THROWS_WITH_AS(build_v0(P, t->alpha_pow(20), t->alpha_pow(5)),
                         doctest::Contains("InvalidRoot"), Error);
}

TEST_CASE("CZ set from the printed 10x8 generators") {
    CodeHandle code = testutil::sec32_code();
    CHECK(code.vc.size() == 16);
    CHECK(code.ecz.size() == 4);
    for (const auto& r : code.ecz) CHECK(r.a == code.gamma);
    // Vc is all of V0 here
    CHECK(as_set(code.vc) == as_set(code.v0.points()));
    // profile: s=1, m=4, n=4, d=16, G = y^4+2y^2+2, g_xi = x^4+x^3+2x+1
    REQUIRE(code.profile.s() == 1);
    CHECK(code.profile.groups[0].m == 4);
    CHECK(code.profile.groups[0].n == 4);
    CHECK(code.profile.d == 16);
    CHECK(code.profile.groups[0].g_eta.str() == "y^4+2y^2+2");
    CHECK(code.profile.groups[0].g_xi.str('x') == "x^4+x^3+2x+1");
    CHECK(code.K == 64);
}

TEST_CASE("CZ set of the 4x5 constacyclic example") {
    CodeHandle code = testutil::code_4x5_constacyclic();
    CHECK(code.vc.size() == 8);
    REQUIRE(code.ecz.size() == 2);
    CHECK(code.ecz[0].b == code.beta);
    CHECK(code.ecz[1].b == fe_pow(code.beta, 3));
    REQUIRE(code.profile.s() == 1);
    const auto& g = code.profile.groups[0];
    CHECK(g.m == 2);
    CHECK(g.n_ij == std::vector<int>{2, 2});
    CHECK(g.n == 4);
    CHECK(code.profile.d == 8);
    CHECK(g.g_xi.str('x') == "x^2+x+2");
    CHECK(g.g_eta.str() == "y^4+2y^3+y^2+2y+1");
    // coefficients of each M_{1,j} lie in F_9
    for (const auto& mp : g.eta_min_polys) CHECK(mp.coeffs_in_subfield(g.m));
}

TEST_CASE("CZ set of the 4x5 cyclic example") {
    CodeHandle code = testutil::code_4x5_cyclic();
    CHECK(code.vc.size() == 8);
    REQUIRE(code.profile.s() == 1);
    const auto& g = code.profile.groups[0];
    CHECK(g.g_xi.str('x') == "x^2+1");
    CHECK(g.g_eta.str() == "y^4+y^3+y^2+y+1");
    CHECK(code.profile.d == 8);
}

TEST_CASE("constant generator gives an empty CZ set") {
    auto t = f81b();
    CodeParams P = testutil::params_10x8(t);
    V0Sets v0 = build_v0(P, t->alpha_pow(4), t->alpha_pow(5));
    CzSets cz = cz_from_generators({BiPoly::monomial(P, 0, 0, t->one())}, v0);
    CHECK(cz.vc.empty());
    CHECK(cz.ecz.empty());
}

TEST_CASE("CZ sets from generators are Frobenius-closed") {
    CodeHandle code = testutil::code_4x5_constacyclic();
    const FieldTower* F = code.params.F();
    auto vc = as_set(code.vc);
    for (const auto& z : code.vc)
        CHECK(vc.count({F->frobenius(z.a, 1).exp, F->frobenius(z.b, 1).exp}) == 1);
}

TEST_CASE("profile of the Example-3 ECZ set") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    FieldElement gamma = t->alpha_pow(4), beta = t->alpha_pow(5);
    std::vector<ZeroPoint> ecz = {{gamma, beta},
                                  {gamma, t->alpha_pow(15)},
                                  {gamma, t->alpha_pow(55)}};
    EczProfile prof = profile_from_ecz(P, ecz, gamma, beta);
    REQUIRE(prof.s() == 1);
    CHECK(prof.groups[0].m == 4);
    CHECK(prof.groups[0].n == 3);
    CHECK(prof.d == 12);
    CHECK(prof.groups[0].g_eta.str() == "y^3+a^45y^2+a^70y+a^35");
    CHECK(prof.groups[0].g_xi.str('x') == "x^4+2x^3+x+1");
    // G coefficients pass the F_{q^m} membership test and deg = n
    CHECK(prof.groups[0].g_eta.coeffs_in_subfield(prof.groups[0].m));
    CHECK(prof.groups[0].g_eta.degree() == prof.groups[0].n);
}

TEST_CASE("profile of a single rational point") {
    auto t = f81a();
    CodeParams P(t, 2, 2, t->one(), t->one());
    FieldElement two = t->from_prime_scalar(2);
    EczProfile prof = profile_from_ecz(P, {{two, two}}, two, two);
    CHECK(prof.s() == 1);
    CHECK(prof.groups[0].m == 1);
    CHECK(prof.groups[0].n == 1);
    CHECK(prof.d == 1);
}

TEST_CASE("conjugate first components are rejected") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    FieldElement gamma = t->alpha_pow(4), beta = t->alpha_pow(5);
    // alpha^12 = gamma^3 is conjugate to gamma
    std::vector<ZeroPoint> bad = {{gamma, beta}, {t->alpha_pow(12), beta}};
    CHECK_THROWS_WITH_AS(profile_from_ecz(P, bad, gamma, beta),
                         doctest::Contains("ConjugateFirstComponents"), Error);
    // conjugate second components within a group
    std::vector<ZeroPoint> bad2 = {{gamma, beta}, {gamma, t->alpha_pow(45)}};
    // beta^(3^2) = a^45, conjugate over F_{q^4}? 45 = 5*9 mod 80 -> same orbit
    CHECK_THROWS_AS(profile_from_ecz(P, bad2, gamma, beta), Error);
    // ECZ point that is not a binomial root
    CHECK_THROWS_WITH_AS(profile_from_ecz(P, {{gamma, t->alpha()}}, gamma, beta),
                         doctest::Contains("InvalidRoot"), Error);
}

TEST_CASE("full variety diagnostic") {
    auto t = f81a();
    CodeParams P = testutil::params_4x5(t, 2);
    auto fv = full_variety(P);
    CHECK(fv.size() == 20);
    for (const auto& z : fv) {
        CHECK(fe_pow(z.a, 4) == P.lambda1);
        CHECK(fe_pow(z.b, 5) == P.lambda2);
    }
    // d from the profile equals |Vc| by direct counting for the 4x5 code
    CodeHandle code = testutil::code_4x5_constacyclic();
    CHECK(code.profile.d == (int)code.vc.size());
}

TEST_CASE("eta conjugacy within a group: 10x8 second components") {
    // In the printed 10x8 example the four second components are pairwise
    // non-conjugate over F_81 (every F_81 orbit under q^4 is a singleton).
    CodeHandle code = testutil::sec32_code();
    const auto& g = code.profile.groups[0];
    CHECK(g.etas.size() == 4);
    CHECK(g.n_ij == std::vector<int>{1, 1, 1, 1});
    std::vector<int64_t> exps;
    for (const auto& e : g.etas) exps.push_back(e.exp);
    CHECK(exps == std::vector<int64_t>{5, 15, 45, 55});
}
