#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bicycl/unipoly.hpp"

namespace bicycl {

// Parameters of one quotient ring P[Omega] = F_q[x,y]/<x^M-lambda1, y^N-lambda2>.
struct CodeParams {
    std::shared_ptr<const FieldTower> tower;
    int M = 0;
    int N = 0;
    FieldElement lambda1, lambda2;

    CodeParams() = default;
    CodeParams(std::shared_ptr<const FieldTower> t, int M, int N, FieldElement l1,
               FieldElement l2);

    static constexpr int kAreaCap = 16384;

    const FieldTower* F() const { return tower.get(); }
    uint64_t q() const { return tower->q(); }
    int area() const { return M * N; }
    bool same(const CodeParams& o) const;
};

struct Term {
    int64_t i = 0;
    int64_t j = 0;
    FieldElement c;
};

// Element of P[Omega]: a dense M x N coefficient grid, entry (i,j) holding
// the coefficient of x^i y^j. Coefficients may sit anywhere in the ambient
// field during intermediate computation; code-facing values are checked
// into F_q at module boundaries.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(CodeParams params);

    // {f}_Omega for a term list of arbitrary degrees: folds x^{M+i} into
    // lambda1 x^i and y^{N+j} into lambda2 y^j.
    static BiPoly reduce(const CodeParams& params, const std::vector<Term>& terms);
    static BiPoly monomial(const CodeParams& params, int64_t i, int64_t j,
                           const FieldElement& c);
    // G(y) as an element of the quotient ring.
    static BiPoly from_unipoly_y(const CodeParams& params, const UniPoly& g);
    static BiPoly from_unipoly_x(const CodeParams& params, const UniPoly& g);

    const CodeParams& params() const { return params_; }
    bool valid() const { return params_.M > 0; }
    const FieldElement& at(int i, int j) const { return c_[(size_t)i * params_.N + j]; }
    void set(int i, int j, const FieldElement& v) { c_[(size_t)i * params_.N + j] = v; }
    bool is_zero() const;
    bool coeffs_in_base_field() const;  // every coefficient in F_q
    // Throws ParamMismatch unless every coefficient lies in F_q.
    void require_base_field(const std::string& what) const;

    FieldElement eval(const FieldElement& a, const FieldElement& b) const;
    UniPoly eval_x(const FieldElement& xi) const;  // f(xi, y)

    BiPoly shift_x() const;  // {x f}_Omega: column lambda1-shift
    BiPoly shift_y() const;  // {y f}_Omega: row lambda2-shift
    BiPoly reciprocal() const;  // x^{M-1} y^{N-1} f(1/x, 1/y)
    BiPoly scaled(const FieldElement& s) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);  // product in P[Omega]
    friend bool operator==(const BiPoly& a, const BiPoly& b);
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;        // "2x^3y + x + 1" style, canonical term order
    std::string grid_str() const;   // M lines of N tokens

  private:
    CodeParams params_;
    std::vector<FieldElement> c_;
};

// Textual polynomial form; accepts digit and a^k coefficients, and reduces
// into the quotient ring.
BiPoly parse_bipoly(const CodeParams& params, const std::string& text);
// Grid form: M lines of N whitespace-separated tokens.
BiPoly parse_grid(const CodeParams& params, const std::string& text);

std::string element_token(const FieldTower& F, const FieldElement& x);
FieldElement parse_element_token(const FieldTower& F, const std::string& tok);

}  // namespace bicycl
