#include "bicycl/gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bicycl {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotInSpan: return "NotInSpan";
        case Errc::NoRootInField: return "NoRootInField";
        case Errc::ParamMismatch: return "ParamMismatch";
        case Errc::InvalidRoot: return "InvalidRoot";
        case Errc::ConjugateFirstComponents: return "ConjugateFirstComponents";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::NonzeroParityInput: return "NonzeroParityInput";
        case Errc::OracleDisagreement: return "OracleDisagreement";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::SpecParseError: return "SpecParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

int64_t gcd_i64(int64_t a, int64_t b) {
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

namespace {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_pos(int64_t v, int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// ---- Z_p[x] helpers used only for the irreducibility check ----

using ZpPoly = std::vector<int64_t>;  // ascending coefficients, trimmed

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& f, int64_t p) {
    int64_t lead_inv = 0;
    {
        // f is monic in our usage, but keep the general inverse.
        int64_t lead = f.back();
        for (int64_t v = 1; v < p; ++v)
            if (v * lead % p == 1) { lead_inv = v; break; }
    }
    zp_trim(a);
    while ((int)a.size() >= (int)f.size()) {
        int64_t c = a.back() * lead_inv % p;
        size_t shift = a.size() - f.size();
        for (size_t i = 0; i < f.size(); ++i)
            a[shift + i] = mod_pos(a[shift + i] - c * f[i], p);
        zp_trim(a);
    }
    return a;
}

ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return zp_mod(std::move(r), f, p);
}

// x^(p^k) mod f
ZpPoly zp_frob_pow(uint64_t pk, const ZpPoly& f, int64_t p) {
    ZpPoly base = zp_mod({0, 1}, f, p);
    ZpPoly r = {1};
    while (pk) {
        if (pk & 1) r = zp_mulmod(r, base, f, p);
        base = zp_mulmod(base, base, f, p);
        pk >>= 1;
    }
    return r;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, int64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f of degree n is irreducible over Z_p iff x^(p^n) = x mod f
// and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
bool zp_irreducible(const ZpPoly& f, int64_t p) {
    int n = (int)f.size() - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    uint64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= (uint64_t)p;
    ZpPoly xpn = zp_frob_pow(pn, f, p);
    ZpPoly x = zp_mod({0, 1}, f, p);
    if (xpn != x) return false;
    std::vector<int> primes;
    int m = n;
    for (int r = 2; r * r <= m; ++r)
        while (m % r == 0) {
            if (primes.empty() || primes.back() != r) primes.push_back(r);
            m /= r;
        }
    if (m > 1) primes.push_back(m);
    for (int r : primes) {
        uint64_t pk = 1;
        for (int i = 0; i < n / r; ++i) pk *= (uint64_t)p;
        ZpPoly h = zp_frob_pow(pk, f, p);
        // h - x
        ZpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_pos(diff[1] - 1, p);
        zp_trim(diff);
        ZpPoly g = zp_gcd(f, diff, p);
        if ((int)g.size() - 1 != 0) return false;
    }
    return true;
}

}  // namespace

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.tower != b.tower) fail(Errc::ParamMismatch, "elements from different towers");
    return a.exp == b.exp;
}

std::shared_ptr<const FieldTower> FieldTower::build(int64_t p, int e, int L,
                                                    std::vector<int64_t> defining_poly) {
    if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p));
    if (e < 1 || L < 1) fail(Errc::InvalidArgument, "e and L must be positive");
    int n = e * L;
    for (auto& c : defining_poly) c = mod_pos(c, p);
    while (defining_poly.size() > 1 && defining_poly.back() == 0) defining_poly.pop_back();
    if ((int)defining_poly.size() != n + 1 || defining_poly.back() != 1)
        fail(Errc::InvalidArgument, "defining polynomial must be monic of degree e*L");

    uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= (uint64_t)p;
        if (size > kTableCap) fail(Errc::CapExceeded, "p^(eL) exceeds the table cap 2^24");
    }

    if (!zp_irreducible(defining_poly, p))
        fail(Errc::NotIrreducible, "defining polynomial is reducible over Z_p");

    auto t = std::shared_ptr<FieldTower>(new FieldTower());
    t->p_ = p;
    t->e_ = e;
    t->L_ = L;
    t->q_ = 1;
    for (int i = 0; i < e; ++i) t->q_ *= (uint64_t)p;
    t->size_ = size;
    t->poly_ = defining_poly;
    t->log_.assign(size, -1);
    t->antilog_.assign(size - 1, 0);

    // Walk alpha^0, alpha^1, ... packing coordinate vectors base p. Returning
    // to 1 before exponent p^(eL)-1 means alpha is not primitive.
    std::vector<int64_t> cur(n, 0);
    cur[0] = 1;
    auto pack = [&](const std::vector<int64_t>& c) {
        uint64_t v = 0;
        for (int i = n - 1; i >= 0; --i) v = v * (uint64_t)p + (uint64_t)c[i];
        return (uint32_t)v;
    };
    for (uint64_t k = 0; k < size - 1; ++k) {
        uint32_t pk = pack(cur);
        if (pk == 1 && k > 0)
            fail(Errc::NotPrimitive, "alpha has order " + std::to_string(k));
        t->antilog_[k] = pk;
        t->log_[pk] = (int32_t)k;
        // cur *= x mod defining_poly
        int64_t carry = cur[n - 1];
        for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry) {
            for (int i = 0; i < n; ++i)
                cur[i] = mod_pos(cur[i] - carry * defining_poly[i], p);
        }
    }
    if (pack(cur) != 1) fail(Errc::NotPrimitive, "alpha order does not divide p^(eL)-1");

    t->neg_one_exp_ = (p == 2) ? 0 : (int64_t)((size - 1) / 2);
    return t;
}

void FieldTower::check(const FieldElement& x) const {
    if (x.tower != this) fail(Errc::ParamMismatch, "element belongs to a different tower");
}

uint32_t FieldTower::packed(const FieldElement& x) const {
    check(x);
    return x.is_zero() ? 0 : antilog_[(uint64_t)x.exp];
}

FieldElement FieldTower::from_packed(uint32_t v) const {
    if (v == 0) return zero();
    return {this, log_[v]};
}

FieldElement FieldTower::alpha_pow(int64_t k) const {
    return {this, mod_pos(k, (int64_t)group_order())};
}

FieldElement FieldTower::from_prime_scalar(int64_t v) const {
    v = mod_pos(v, p_);
    return from_packed((uint32_t)v);  // scalar v packs as the single digit v
}

FieldElement FieldTower::from_coords(const std::vector<int64_t>& c) const {
    int n = e_ * L_;
    if ((int)c.size() > n) fail(Errc::InvalidArgument, "coordinate vector too long");
    uint64_t v = 0;
    for (int i = n - 1; i >= 0; --i) {
        int64_t d = i < (int)c.size() ? mod_pos(c[i], p_) : 0;
        v = v * (uint64_t)p_ + (uint64_t)d;
    }
    return from_packed((uint32_t)v);
}

std::vector<int64_t> FieldTower::coords(const FieldElement& x) const {
    uint64_t v = packed(x);
    int n = e_ * L_;
    std::vector<int64_t> c(n);
    for (int i = 0; i < n; ++i) {
        c[i] = (int64_t)(v % (uint64_t)p_);
        v /= (uint64_t)p_;
    }
    return c;
}

FieldElement FieldTower::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    uint64_t va = packed(a), vb = packed(b);
    uint64_t r = 0, mult = 1;
    int n = e_ * L_;
    for (int i = 0; i < n; ++i) {
        uint64_t d = (va % (uint64_t)p_ + vb % (uint64_t)p_) % (uint64_t)p_;
        r += d * mult;
        mult *= (uint64_t)p_;
        va /= (uint64_t)p_;
        vb /= (uint64_t)p_;
    }
    return from_packed((uint32_t)r);
}

FieldElement FieldTower::neg(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) return a;
    return {this, mod_pos(a.exp + neg_one_exp_, (int64_t)group_order())};
}

FieldElement FieldTower::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement FieldTower::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    return {this, mod_pos(a.exp + b.exp, (int64_t)group_order())};
}

FieldElement FieldTower::inv(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    return {this, mod_pos(-a.exp, (int64_t)group_order())};
}

FieldElement FieldTower::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FieldTower::pow(const FieldElement& a, int64_t n) const {
    check(a);
    if (a.is_zero()) {
        if (n > 0) return zero();
        if (n == 0) return one();
        fail(Errc::DivisionByZero, "negative power of zero");
    }
    int64_t S = (int64_t)group_order();
    int64_t k = (int64_t)mulmod_u64((uint64_t)mod_pos(a.exp, S), (uint64_t)mod_pos(n, S),
                                    (uint64_t)S);
    return {this, k};
}

FieldElement FieldTower::frobenius(const FieldElement& x, int64_t k) const {
    check(x);
    if (k < 0) fail(Errc::InvalidArgument, "frobenius count must be >= 0");
    if (x.is_zero()) return x;
    uint64_t S = group_order();
    uint64_t qk = powmod_u64(q_, (uint64_t)k, S);
    return {this, (int64_t)mulmod_u64((uint64_t)x.exp, qk, S)};
}

bool FieldTower::in_subfield(const FieldElement& x, int k) const {
    check(x);
    if (k < 1) fail(Errc::InvalidArgument, "subfield degree must be >= 1");
    return frobenius(x, k) == x;
}

FieldElement FieldTower::subfield_generator(int k) const {
    if (k < 1 || L_ % k != 0) fail(Errc::InvalidArgument, "subfield degree must divide L");
    uint64_t qk = 1;
    for (int i = 0; i < k; ++i) qk *= q_;
    return {this, (int64_t)(group_order() / (qk - 1))};
}

int64_t FieldTower::multiplicative_order(const FieldElement& x) const {
    check(x);
    if (x.is_zero()) fail(Errc::InvalidArgument, "zero has no multiplicative order");
    int64_t S = (int64_t)group_order();
    return S / gcd_i64(S, x.exp);
}

std::vector<FieldElement> FieldTower::coords_over_basis(
    const FieldElement& x, const std::vector<FieldElement>& basis) const {
    check(x);
    if (basis.empty()) fail(Errc::InvalidArgument, "empty basis");
    int n = e_ * L_;
    int t = (int)basis.size();
    int cols = t * e_;
    // Unknowns: F_p coordinates of the F_q coefficients c_i = sum_j c_ij u^j,
    // u the canonical F_q generator. Solve A c = coords(x) over Z_p.
    FieldElement u = e_ == 1 ? one() : FieldElement{this, (int64_t)(group_order() / (q_ - 1))};
    std::vector<std::vector<int64_t>> A(n, std::vector<int64_t>(cols + 1, 0));
    for (int i = 0; i < t; ++i) {
        check(basis[i]);
        FieldElement upow = one();
        for (int j = 0; j < e_; ++j) {
            auto col = coords(mul(basis[i], upow));
            for (int r = 0; r < n; ++r) A[r][i * e_ + j] = col[r];
            upow = mul(upow, u);
        }
    }
    auto rhs = coords(x);
    for (int r = 0; r < n; ++r) A[r][cols] = rhs[r];

    // Gaussian elimination over Z_p.
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < cols && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (A[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(A[row], A[pr]);
        int64_t pinv = 0;
        for (int64_t v = 1; v < p_; ++v)
            if (v * A[row][col] % p_ == 1) { pinv = v; break; }
        for (int c = col; c <= cols; ++c) A[row][c] = A[row][c] * pinv % p_;
        for (int r = 0; r < n; ++r) {
            if (r == row || A[r][col] == 0) continue;
            int64_t f = A[r][col];
            for (int c = col; c <= cols; ++c) A[r][c] = mod_pos(A[r][c] - f * A[row][c], p_);
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row < cols) fail(Errc::InvalidArgument, "basis is not F_q-linearly independent");
    for (int r = row; r < n; ++r)
        if (A[r][cols] != 0) fail(Errc::NotInSpan, "element outside the basis span");

    std::vector<int64_t> sol(cols, 0);
    for (int r = 0; r < row; ++r) sol[pivot_col[r]] = A[r][cols];
    std::vector<FieldElement> out;
    out.reserve(t);
    for (int i = 0; i < t; ++i) {
        FieldElement c = zero();
        FieldElement upow = one();
        for (int j = 0; j < e_; ++j) {
            c = add(c, mul(from_prime_scalar(sol[i * e_ + j]), upow));
            upow = mul(upow, u);
        }
        out.push_back(c);
    }
    return out;
}

std::string FieldTower::to_string(const FieldElement& x) const {
    check(x);
    if (x.is_zero()) return "0";
    return "a^" + std::to_string(x.exp);
}

std::string FieldTower::coord_string(const FieldElement& x) const {
    auto c = coords(x);
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

int64_t FieldTower::prime_digit(const FieldElement& x) const {
    uint64_t v = packed(x);
    return v < (uint64_t)p_ ? (int64_t)v : -1;
}

int splitting_degree(uint64_t q, uint64_t M, uint64_t dlog_lambda1, uint64_t N,
                     uint64_t dlog_lambda2) {
    if (q < 2 || M < 1 || N < 1) fail(Errc::InvalidArgument, "bad splitting-degree arguments");
    dlog_lambda1 %= (q - 1);
    dlog_lambda2 %= (q - 1);
    uint64_t qt = 1;
    for (int t = 1; t <= 64; ++t) {
        if (qt > (uint64_t(1) << 62) / q) break;
        qt *= q;
        uint64_t R = qt - 1;
        if (R % M != 0 || R % N != 0) continue;
        // x^M = lambda solvable iff gcd(M, R) | dlog(lambda) in F_{q^t},
        // where that dlog is dlog_q * R/(q-1).
        uint64_t a1 = mulmod_u64(dlog_lambda1 % R, (R / (q - 1)) % R, R);
        uint64_t a2 = mulmod_u64(dlog_lambda2 % R, (R / (q - 1)) % R, R);
        uint64_t g1 = (uint64_t)gcd_i64((int64_t)M, (int64_t)R);
        uint64_t g2 = (uint64_t)gcd_i64((int64_t)N, (int64_t)R);
        if (a1 % g1 == 0 && a2 % g2 == 0) return t;
    }
    fail(Errc::CapExceeded, "splitting degree beyond 64-bit search range");
}

FieldElement primitive_root_of(const FieldElement& lambda, int64_t M) {
    const FieldTower* F = lambda.tower;
    if (!F) fail(Errc::InvalidArgument, "null element");
    if (lambda.is_zero()) fail(Errc::InvalidArgument, "lambda must be nonzero");
    if (M < 1) fail(Errc::InvalidArgument, "M must be positive");
    if (!F->in_subfield(lambda, 1)) fail(Errc::InvalidArgument, "lambda must lie in F_q");
    int64_t S = (int64_t)F->group_order();
    int64_t A = lambda.exp;
    int64_t g = gcd_i64(M, S);
    int64_t target = M * (S / gcd_i64(S, A));  // M * ord(lambda); gcd(S,0)=S
    if (A % g == 0) {
        // Solutions of kM = A (mod S): k0 + t*(S/g), ascending.
        int64_t Sg = S / g;
        int64_t Mg = (M / g) % Sg;
        auto modinv = [](int64_t a, int64_t m) {
            int64_t r0 = m, r1 = a % m, s0 = 0, s1 = 1;
            while (r1) {
                int64_t qd = r0 / r1;
                int64_t r = r0 - qd * r1;
                r0 = r1;
                r1 = r;
                int64_t s = s0 - qd * s1;
                s0 = s1;
                s1 = s;
            }
            return ((s0 % m) + m) % m;
        };
        int64_t inv = Sg > 1 ? modinv(Mg, Sg) : 0;
        int64_t k0 = Sg > 1 ? (int64_t)mulmod_u64((uint64_t)((A / g) % Sg), (uint64_t)inv,
                                                  (uint64_t)Sg)
                            : 0;
        for (int64_t t = 0; t < g; ++t) {
            int64_t k = k0 + t * Sg;
            int64_t ord = S / gcd_i64(S, k);
            if (ord == target) return F->alpha_pow(k);
        }
    }
    fail(Errc::NoRootInField,
         "no primitive " + std::to_string(M) + "-th root of " + F->to_string(lambda));
}

}  // namespace bicycl
