#include "bicycl/unipoly.hpp"

#include <sstream>

namespace bicycl {

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) fail(Errc::InvalidArgument, "use UniPoly(tower) for the zero polynomial");
    tower_ = c_[0].tower;
    for (auto& x : c_)
        if (x.tower != tower_) fail(Errc::ParamMismatch, "mixed towers in coefficients");
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_roots(const FieldTower* tower, const std::vector<FieldElement>& roots) {
    UniPoly r({tower->one()});
    for (const auto& root : roots) {
        UniPoly lin({tower->neg(root), tower->one()});
        r = r * lin;
    }
    return r;
}

UniPoly UniPoly::constant(const FieldElement& c) {
    UniPoly r(c.tower);
    if (!c.is_zero()) r.c_ = {c};
    return r;
}

bool UniPoly::is_monic() const {
    return !c_.empty() && c_.back() == tower_->one();
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return tower_ ? tower_->zero() : FieldElement{};
    return c_[i];
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    const FieldTower* F = tower_ ? tower_ : x.tower;
    FieldElement r = F->zero();
    for (int i = (int)c_.size() - 1; i >= 0; --i) r = F->add(F->mul(r, x), c_[i]);
    return r;
}

bool UniPoly::coeffs_in_subfield(int k) const {
    for (const auto& c : c_)
        if (!tower_->in_subfield(c, k)) return false;
    return true;
}

UniPoly UniPoly::scaled(const FieldElement& s) const {
    const FieldTower* F = tower_ ? tower_ : s.tower;
    if (s.is_zero()) return UniPoly(F);
    UniPoly r = *this;
    for (auto& c : r.c_) c = F->mul(c, s);
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const FieldTower* F = a.tower_ ? a.tower_ : b.tower_;
    UniPoly r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), F->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        FieldElement s = F->zero();
        if (i < a.c_.size()) s = F->add(s, a.c_[i]);
        if (i < b.c_.size()) s = F->add(s, b.c_[i]);
        r.c_[i] = s;
    }
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    const FieldTower* F = a.tower_ ? a.tower_ : b.tower_;
    UniPoly nb = b;
    for (auto& c : nb.c_) c = F->neg(c);
    if (!nb.tower_) nb.tower_ = F;
    return a + nb;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    const FieldTower* F = a.tower_ ? a.tower_ : b.tower_;
    UniPoly r(F);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, F->zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = F->add(r.c_[i + j], F->mul(a.c_[i], b.c_[j]));
    r.trim();
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& f, const UniPoly& d) {
    if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    const FieldTower* F = d.tower_;
    FieldElement lead_inv = F->inv(d.c_.back());
    UniPoly q(F), r = f;
    if (!r.tower_) r.tower_ = F;
    if (r.degree() >= d.degree()) q.c_.assign(r.degree() - d.degree() + 1, F->zero());
    while (r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        FieldElement c = F->mul(r.c_.back(), lead_inv);
        q.c_[shift] = c;
        for (int i = 0; i <= d.degree(); ++i)
            r.c_[shift + i] = F->sub(r.c_[shift + i], F->mul(c, d.c_[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

std::string UniPoly::str(char var) const {
    if (is_zero()) return "0";
    const FieldTower* F = tower_;
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        int64_t dg = F->prime_digit(c_[i]);
        bool coeff_one = c_[i] == F->one();
        if (i == 0) {
            os << (dg >= 0 ? std::to_string(dg) : F->to_string(c_[i]));
        } else {
            if (!coeff_one) os << (dg >= 0 ? std::to_string(dg) : F->to_string(c_[i]));
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<FieldElement> frobenius_orbit(const FieldElement& x, int subfield_k) {
    const FieldTower* F = x.tower;
    std::vector<FieldElement> orbit;
    FieldElement y = x;
    do {
        orbit.push_back(y);
        y = F->frobenius(y, subfield_k);
    } while (!(y == x));
    return orbit;
}

UniPoly minimal_polynomial(const FieldElement& x, int subfield_k) {
    const FieldTower* F = x.tower;
    if (!F) fail(Errc::InvalidArgument, "null element");
    if (subfield_k < 1 || F->L() % subfield_k != 0)
        fail(Errc::InvalidArgument, "subfield degree must divide L");
    auto orbit = frobenius_orbit(x, subfield_k);
    UniPoly m = UniPoly::from_roots(F, orbit);
    if (!m.coeffs_in_subfield(subfield_k))
        fail(Errc::InvalidArgument, "minimal polynomial coefficients escaped F_{q^k}");
    return m;
}

}  // namespace bicycl
