#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bicycl/errors.hpp"

namespace bicycl {

class FieldTower;

// Element of the ambient field F_{p^{eL}}: either the distinguished zero or
// a power of the fixed primitive element alpha. Elements are cheap value
// types; they must not outlive the tower that produced them.
struct FieldElement {
    const FieldTower* tower = nullptr;
    int64_t exp = -1;  // -1 encodes zero, otherwise reduced mod p^{eL}-1

    bool is_zero() const { return exp < 0; }
};

bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

// One ambient field F_{p^{eL}} containing F_q (q = p^e) and every
// intermediate subfield as its set of q^k-power-fixed elements. Arithmetic
// is driven by log/antilog tables between alpha-exponents and Z_p
// coordinate vectors. Immutable after construction; safe for concurrent
// shared reads.
class FieldTower {
  public:
    static constexpr uint64_t kTableCap = uint64_t(1) << 24;

    // definingPoly: ascending coefficients over Z_p, monic of degree e*L,
    // e.g. x^4+x+2 <-> {2,1,0,0,1}. Must be irreducible and primitive.
    static std::shared_ptr<const FieldTower> build(int64_t p, int e, int L,
                                                   std::vector<int64_t> defining_poly);

    int64_t p() const { return p_; }
    int e() const { return e_; }
    int L() const { return L_; }
    uint64_t q() const { return q_; }
    uint64_t size() const { return size_; }
    uint64_t group_order() const { return size_ - 1; }
    const std::vector<int64_t>& defining_poly() const { return poly_; }

    FieldElement zero() const { return {this, -1}; }
    FieldElement one() const { return {this, 0}; }
    FieldElement alpha() const { return alpha_pow(1); }
    FieldElement alpha_pow(int64_t k) const;
    // v mod p as a field element (sum of v ones).
    FieldElement from_prime_scalar(int64_t v) const;
    FieldElement from_coords(const std::vector<int64_t>& c) const;
    std::vector<int64_t> coords(const FieldElement& x) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, int64_t n) const;

    // x^{q^k}; the identity on F_{q^k}.
    FieldElement frobenius(const FieldElement& x, int64_t k) const;
    // Membership in F_{q^k}, i.e. x^{q^k} = x.
    bool in_subfield(const FieldElement& x, int k) const;
    // Canonical generator of the F_{q^k} unit group: alpha^{(p^{eL}-1)/(q^k-1)}.
    // Requires k | L.
    FieldElement subfield_generator(int k) const;
    int64_t multiplicative_order(const FieldElement& x) const;

    // F_q-coordinates of x over an F_q-linearly independent basis.
    // Recombining coordinates with the basis reproduces x exactly.
    std::vector<FieldElement> coords_over_basis(const FieldElement& x,
                                                const std::vector<FieldElement>& basis) const;

    // "0" or "a^k".
    std::string to_string(const FieldElement& x) const;
    // Coordinate view "(c0,c1,...)".
    std::string coord_string(const FieldElement& x) const;
    // Prime-subfield digit when x = v*1 with 0 <= v < p, else -1.
    int64_t prime_digit(const FieldElement& x) const;

  private:
    FieldTower() = default;

    uint32_t packed(const FieldElement& x) const;
    FieldElement from_packed(uint32_t v) const;
    void check(const FieldElement& x) const;

    int64_t p_ = 0;
    int e_ = 0;
    int L_ = 0;
    uint64_t q_ = 0;
    uint64_t size_ = 0;
    std::vector<int64_t> poly_;
    std::vector<int32_t> log_;      // packed value -> exponent (-1 for zero slot)
    std::vector<uint32_t> antilog_; // exponent -> packed value
    int64_t neg_one_exp_ = 0;       // exponent of -1
};

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return a.tower ? a.tower->add(a, b) : b.tower->add(a, b);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return a.tower ? a.tower->sub(a, b) : b.tower->sub(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return a.tower ? a.tower->mul(a, b) : b.tower->mul(a, b);
}
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a.tower ? a.tower->div(a, b) : b.tower->div(a, b);
}
inline FieldElement operator-(const FieldElement& a) { return a.tower->neg(a); }
inline FieldElement inv(const FieldElement& a) { return a.tower->inv(a); }
inline FieldElement fe_pow(const FieldElement& a, int64_t n) { return a.tower->pow(a, n); }
inline FieldElement frobenius(const FieldElement& a, int64_t k) {
    return a.tower->frobenius(a, k);
}

// Smallest L such that x^M - lambda1 and y^N - lambda2 both split in
// F_{q^L}. dlog arguments are discrete logs of the lambdas in F_q with
// respect to any generator, in [0, q-1). Pure integer arithmetic; no field
// tables are built.
int splitting_degree(uint64_t q, uint64_t M, uint64_t dlog_lambda1, uint64_t N,
                     uint64_t dlog_lambda2);

// Primitive M-th root of lambda: gamma with gamma^M = lambda and
// ord(gamma) = M * ord(lambda); deterministically the smallest
// alpha-exponent satisfying both.
FieldElement primitive_root_of(const FieldElement& lambda, int64_t M);

int64_t gcd_i64(int64_t a, int64_t b);

}  // namespace bicycl
