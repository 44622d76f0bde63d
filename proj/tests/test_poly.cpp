#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "test_util.hpp"

using namespace bicycl;
using testutil::f81a;
using testutil::f81b;

namespace {

// Independent reduction oracle: schoolbook product of term lists followed by
// long division by x^M - lambda1 and then y^N - lambda2.
BiPoly mul_oracle(const BiPoly& f, const BiPoly& g) {
    const CodeParams& P = f.params();
    const FieldTower* F = P.F();
    std::map<std::pair<int, int>, FieldElement> acc;
    for (int i1 = 0; i1 < P.M; ++i1)
        for (int j1 = 0; j1 < P.N; ++j1)
            for (int i2 = 0; i2 < P.M; ++i2)
                for (int j2 = 0; j2 < P.N; ++j2) {
                    FieldElement c = f.at(i1, j1) * g.at(i2, j2);
                    if (c.is_zero()) continue;
                    auto key = std::pair(i1 + i2, j1 + j2);
                    auto it = acc.find(key);
                    if (it == acc.end())
                        acc[key] = c;
                    else
                        it->second = it->second + c;
                }
    // divide out x^M - lambda1 from the top degree down
    for (int i = 2 * (P.M - 1); i >= P.M; --i)
        for (int j = 0; j <= 2 * (P.N - 1); ++j) {
            auto it = acc.find({i, j});
            if (it == acc.end() || it->second.is_zero()) continue;
            FieldElement c = it->second;
            it->second = F->zero();
            auto key = std::pair(i - P.M, j);
            auto lo = acc.find(key);
            if (lo == acc.end())
                acc[key] = c * P.lambda1;
            else
                lo->second = lo->second + c * P.lambda1;
        }
    for (int j = 2 * (P.N - 1); j >= P.N; --j)
        for (int i = 0; i < P.M; ++i) {
            auto it = acc.find({i, j});
            if (it == acc.end() || it->second.is_zero()) continue;
            FieldElement c = it->second;
            it->second = F->zero();
            auto key = std::pair(i, j - P.N);
            auto lo = acc.find(key);
            if (lo == acc.end())
                acc[key] = c * P.lambda2;
            else
                lo->second = lo->second + c * P.lambda2;
        }
    BiPoly out(P);
    for (const auto& [key, c] : acc)
        if (key.first < P.M && key.second < P.N)
            out.set(key.first, key.second, out.at(key.first, key.second) + c);
    return out;
}

// Algorithm-1 lift of G_eta1 for the 10x8 ECZ {(a^4,a^5),(a^4,a^15),(a^4,a^55)}
// under x^4+x+2; it vanishes at exactly those points.
const char* kGxiEta1 = "2x^3y + 2x^3 + x^2y^2 + x^2y + 2x^2 + 2xy^2 + 2xy + y^3 + 2";

}  // namespace

TEST_CASE("reduction into the quotient ring") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    // x^M collapses to the constant lambda1
    BiPoly xm = BiPoly::reduce(P, {Term{10, 0, t->one()}});
    CHECK(xm == BiPoly::monomial(P, 0, 0, t->from_prime_scalar(2)));
    // x^10 y^8 -> lambda1*lambda2 = 4 = 1
    BiPoly xy = BiPoly::reduce(P, {Term{10, 8, t->one()}});
    CHECK(xy == BiPoly::monomial(P, 0, 0, t->one()));
    // reduction is F_q-linear on random term lists
    for (int it = 0; it < 20; ++it) {
        std::vector<Term> u, v, w;
        for (int k = 0; k < 12; ++k) {
            Term a{(int64_t)(testutil::rng()() % 30), (int64_t)(testutil::rng()() % 25),
                   testutil::random_fq(*t)};
            Term b{(int64_t)(testutil::rng()() % 30), (int64_t)(testutil::rng()() % 25),
                   testutil::random_fq(*t)};
            u.push_back(a);
            v.push_back(b);
            w.push_back(a);
            w.push_back(b);
        }
        CHECK(BiPoly::reduce(P, w) == BiPoly::reduce(P, u) + BiPoly::reduce(P, v));
    }
}

TEST_CASE("quotient-ring multiplication agrees with the long-division oracle") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    UniPoly gxi = minimal_polynomial(t->alpha_pow(4), 1);
    BiPoly f = BiPoly::from_unipoly_x(P, gxi);
    BiPoly x6 = BiPoly::monomial(P, 6, 0, t->one());
    CHECK(f * x6 == mul_oracle(f, x6));
    for (int it = 0; it < 8; ++it) {
        BiPoly u = testutil::random_grid(P);
        BiPoly v = testutil::random_grid(P);
        CHECK(u * v == mul_oracle(u, v));
    }
    // ring laws
    BiPoly a = testutil::random_grid(P), b = testutil::random_grid(P),
           c = testutil::random_grid(P);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("evaluation") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    BiPoly g1 = parse_bipoly(P, kGxiEta1);
    FieldElement gamma = t->alpha_pow(4), beta = t->alpha_pow(5);
    CHECK(g1.eval(gamma, beta).is_zero());
    CHECK(g1.eval(gamma, fe_pow(beta, 3)).is_zero());
    CHECK(g1.eval(gamma, t->alpha_pow(55)).is_zero());
    // (gamma, 2*beta) is not in the ECZ of Example 3
    CHECK(!g1.eval(gamma, t->alpha_pow(45)).is_zero());
    BiPoly one = BiPoly::monomial(P, 0, 0, t->one());
    CHECK(one.eval(testutil::random_element(*t), testutil::random_element(*t)) == t->one());

    // evaluation at common binomial roots is a ring map
    for (int it = 0; it < 10; ++it) {
        BiPoly u = testutil::random_grid(P), v = testutil::random_grid(P);
        FieldElement a = t->alpha_pow(4 + 8 * (int64_t)(testutil::rng()() % 10));
        FieldElement b = t->alpha_pow(5 + 10 * (int64_t)(testutil::rng()() % 8));
        CHECK((u * v).eval(a, b) == u.eval(a, b) * v.eval(a, b));
        CHECK((u + v).eval(a, b) == u.eval(a, b) + v.eval(a, b));
    }
}

TEST_CASE("constacyclic shifts") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    BiPoly f = testutil::random_grid(P);
    BiPoly sx = f;
    for (int i = 0; i < P.M; ++i) sx = sx.shift_x();
    CHECK(sx == f.scaled(P.lambda1));
    BiPoly sy = f;
    for (int j = 0; j < P.N; ++j) sy = sy.shift_y();
    CHECK(sy == f.scaled(P.lambda2));
    CHECK(f.shift_x().shift_y() == f.shift_y().shift_x());
    // shift_x is multiplication by x; the array form has top row
    // lambda1 * (last row)
    BiPoly x = BiPoly::monomial(P, 1, 0, t->one());
    CHECK(f.shift_x() == x * f);
    for (int j = 0; j < P.N; ++j) {
        CHECK(f.shift_x().at(0, j) == P.lambda1 * f.at(P.M - 1, j));
        for (int i = 1; i < P.M; ++i) CHECK(f.shift_x().at(i, j) == f.at(i - 1, j));
    }
}

TEST_CASE("reciprocal polynomial") {
    auto t = f81a();
    CodeParams P = testutil::params_10x8(t);
    BiPoly c = BiPoly::monomial(P, 0, 0, t->from_prime_scalar(2));
    CHECK(c.reciprocal() == BiPoly::monomial(P, P.M - 1, P.N - 1, t->from_prime_scalar(2)));
    BiPoly m = BiPoly::monomial(P, 3, 5, t->one());
    CHECK(m.reciprocal() == BiPoly::monomial(P, P.M - 1 - 3, P.N - 1 - 5, t->one()));
    for (int it = 0; it < 20; ++it) {
        BiPoly f = testutil::random_grid(P);
        CHECK(f.reciprocal().reciprocal() == f);
    }
}

TEST_CASE("univariate products from the worked examples") {
    // roots beta, beta^3, 2beta, 2beta^3 with beta = a^5 under x^4+2x^3+2
    auto b = f81b();
    FieldElement beta = b->alpha_pow(5), two = b->from_prime_scalar(2);
    UniPoly G = UniPoly::from_roots(
        b.get(), {beta, fe_pow(beta, 3), two * beta, two * fe_pow(beta, 3)});
    CHECK(G.str() == "y^4+2y^2+2");

    // (y^2 + theta y + 1)(y^2 + theta^3 y + 1) with theta = a^10 under x^4+x+2
    auto a = f81a();
    FieldElement theta = a->alpha_pow(10);
    UniPoly m11({a->one(), theta, a->one()});
    std::vector<FieldElement> m11c = {a->one(), theta, a->one()};
    UniPoly M11(std::vector<FieldElement>{a->one(), theta, a->one()});
    UniPoly M12(std::vector<FieldElement>{a->one(), fe_pow(theta, 3), a->one()});
    CHECK((M11 * M12).str() == "y^4+2y^3+y^2+2y+1");
    // and those quadratics are the minimal polynomials of beta, beta^3 over F_9
    CHECK(minimal_polynomial(a->alpha_pow(8), 2) == M11);
    CHECK(minimal_polynomial(a->alpha_pow(24), 2) == M12);
}

TEST_CASE("univariate division") {
    auto a = f81a();
    UniPoly f = minimal_polynomial(a->alpha_pow(4), 1);
    auto [q0, r0] = UniPoly::divmod(f, f);
    CHECK(r0.is_zero());
    CHECK(q0.str() == "1");
    for (int it = 0; it < 50; ++it) {
        std::vector<FieldElement> fc, dc;
        for (int i = 0; i < 7; ++i) fc.push_back(testutil::random_element(*a));
        for (int i = 0; i < 3; ++i) dc.push_back(testutil::random_element(*a));
        dc.push_back(a->one());  // monic divisor
        UniPoly fpoly = fc.empty() ? UniPoly(a.get()) : UniPoly(fc);
        UniPoly dpoly(dc);
        auto [q, r] = UniPoly::divmod(fpoly, dpoly);
        CHECK(q * dpoly + r == fpoly);
        CHECK(r.degree() < dpoly.degree());
    }
    CHECK_THROWS_AS(UniPoly::divmod(f, UniPoly(a.get())), Error);
}

TEST_CASE("textual and grid round trips") {
    auto t = f81a();
    CodeParams P(t, 4, 5, t->from_prime_scalar(2), t->from_prime_scalar(2));
    BiPoly f = parse_bipoly(P, "2x^3y + x + 1");
    CHECK(f.at(3, 1) == t->from_prime_scalar(2));
    CHECK(f.at(1, 0) == t->one());
    CHECK(f.at(0, 0) == t->one());
    CHECK(f.str() == "2x^3y + x + 1");
    for (int it = 0; it < 25; ++it) {
        BiPoly g = testutil::random_grid(P);
        CHECK(parse_bipoly(P, g.str()) == g);
        CHECK(parse_grid(P, g.grid_str()) == g);
    }
    // minus signs and exponent folding
    BiPoly h = parse_bipoly(P, "-x - 2y + x^4");
    CHECK(h.at(1, 0) == t->from_prime_scalar(2));
    CHECK(h.at(0, 1) == t->one());
    CHECK(h.at(0, 0) == t->from_prime_scalar(2));  // x^4 = lambda1 = 2
    CHECK_THROWS_AS(parse_bipoly(P, "x^"), Error);
    CHECK_THROWS_AS(parse_bipoly(P, ""), Error);
    CHECK_THROWS_AS(parse_grid(P, "1 2 3"), Error);
}

TEST_CASE("base-field boundary check") {
    auto t = f81a();
    CodeParams P = testutil::params_4x5(t);
    BiPoly f = BiPoly::monomial(P, 1, 1, t->alpha());  // alpha is outside F_3
    CHECK(!f.coeffs_in_base_field());
    CHECK_THROWS_AS(f.require_base_field("test"), Error);
    BiPoly g = BiPoly::monomial(P, 1, 1, t->from_prime_scalar(2));
    CHECK(g.coeffs_in_base_field());
}

TEST_CASE("mismatched rings are rejected") {
    auto t = f81a();
    CodeParams P1 = testutil::params_4x5(t);
    CodeParams P2 = testutil::params_10x8(t);
    BiPoly u(P1), v(P2);
    CHECK_THROWS_AS(u + v, Error);
    CHECK_THROWS_AS(u * v, Error);
}

TEST_CASE("code parameter validation") {
    auto t = f81a();
    FieldElement two = t->from_prime_scalar(2);
    CHECK_THROWS_AS(CodeParams(t, 3, 5, two, two), Error);   // gcd(M, p) != 1
    CHECK_THROWS_AS(CodeParams(t, 4, 5, t->zero(), two), Error);
    CHECK_THROWS_AS(CodeParams(t, 4, 5, t->alpha(), two), Error);  // alpha outside F_q
    CHECK_THROWS_AS(CodeParams(t, 200, 100, two, two), Error);     // area cap
}
