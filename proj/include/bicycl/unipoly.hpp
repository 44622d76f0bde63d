#pragma once

#include <utility>
#include <vector>

#include "bicycl/gf.hpp"

namespace bicycl {

// Univariate polynomial with ambient-field coefficients (ascending order,
// trailing coefficient nonzero unless zero). Which subfield the
// coefficients live in is the caller's contract; in_subfield checks are
// applied where a module boundary requires them.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const FieldTower* tower) : tower_(tower) {}
    explicit UniPoly(std::vector<FieldElement> coeffs);

    static UniPoly from_roots(const FieldTower* tower, const std::vector<FieldElement>& roots);
    static UniPoly constant(const FieldElement& c);

    const FieldTower* tower() const { return tower_; }
    int degree() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    // Coefficient of X^i (zero beyond the stored degree).
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement eval(const FieldElement& x) const;
    bool coeffs_in_subfield(int k) const;

    UniPoly scaled(const FieldElement& s) const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // f = q*d + r with deg r < deg d; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& d);

    std::string str(char var = 'y') const;

  private:
    void trim();

    const FieldTower* tower_ = nullptr;
    std::vector<FieldElement> c_;
};

// Monic minimal polynomial of x over F_{q^k}: product over the Frobenius
// orbit of x under y -> y^{q^k}. Requires k | L.
UniPoly minimal_polynomial(const FieldElement& x, int subfield_k);

// Frobenius orbit {x, x^{q^k}, x^{q^2k}, ...} in visiting order.
std::vector<FieldElement> frobenius_orbit(const FieldElement& x, int subfield_k);

}  // namespace bicycl
