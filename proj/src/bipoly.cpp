#include "bicycl/bipoly.hpp"

#include <cctype>
#include <sstream>

namespace bicycl {

CodeParams::CodeParams(std::shared_ptr<const FieldTower> t, int M_, int N_, FieldElement l1,
                       FieldElement l2)
    : tower(std::move(t)), M(M_), N(N_), lambda1(l1), lambda2(l2) {
    if (!tower) fail(Errc::InvalidArgument, "null tower");
    if (M < 1 || N < 1) fail(Errc::InvalidArgument, "M and N must be positive");
    if ((int64_t)M * N > kAreaCap) fail(Errc::CapExceeded, "M*N exceeds the desk-scale cap");
    if (M % tower->p() == 0 || N % tower->p() == 0)
        fail(Errc::InvalidArgument, "M and N must be co-prime to the characteristic");
    if (lambda1.is_zero() || lambda2.is_zero())
        fail(Errc::InvalidArgument, "lambda1 and lambda2 must be nonzero");
    if (!tower->in_subfield(lambda1, 1) || !tower->in_subfield(lambda2, 1))
        fail(Errc::InvalidArgument, "lambda1 and lambda2 must lie in F_q");
}

bool CodeParams::same(const CodeParams& o) const {
    return tower.get() == o.tower.get() && M == o.M && N == o.N && lambda1.exp == o.lambda1.exp &&
           lambda2.exp == o.lambda2.exp;
}

BiPoly::BiPoly(CodeParams params) : params_(std::move(params)) {
    c_.assign((size_t)params_.area(), params_.F()->zero());
}

BiPoly BiPoly::reduce(const CodeParams& params, const std::vector<Term>& terms) {
    const FieldTower* F = params.F();
    BiPoly r(params);
    for (const auto& t : terms) {
        if (t.i < 0 || t.j < 0) fail(Errc::InvalidArgument, "negative exponent");
        if (t.c.is_zero()) continue;
        int64_t qi = t.i / params.M, ri = t.i % params.M;
        int64_t qj = t.j / params.N, rj = t.j % params.N;
        FieldElement c = t.c;
        if (qi) c = F->mul(c, F->pow(params.lambda1, qi));
        if (qj) c = F->mul(c, F->pow(params.lambda2, qj));
        r.set((int)ri, (int)rj, F->add(r.at((int)ri, (int)rj), c));
    }
    return r;
}

BiPoly BiPoly::monomial(const CodeParams& params, int64_t i, int64_t j, const FieldElement& c) {
    return reduce(params, {Term{i, j, c}});
}

BiPoly BiPoly::from_unipoly_y(const CodeParams& params, const UniPoly& g) {
    std::vector<Term> terms;
    for (int k = 0; k <= g.degree(); ++k) terms.push_back({0, k, g.coeff(k)});
    return reduce(params, terms);
}

BiPoly BiPoly::from_unipoly_x(const CodeParams& params, const UniPoly& g) {
    std::vector<Term> terms;
    for (int k = 0; k <= g.degree(); ++k) terms.push_back({k, 0, g.coeff(k)});
    return reduce(params, terms);
}

bool BiPoly::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool BiPoly::coeffs_in_base_field() const {
    for (const auto& c : c_)
        if (!params_.F()->in_subfield(c, 1)) return false;
    return true;
}

void BiPoly::require_base_field(const std::string& what) const {
    if (!coeffs_in_base_field())
        fail(Errc::ParamMismatch, what + " has coefficients outside F_q");
}

FieldElement BiPoly::eval(const FieldElement& a, const FieldElement& b) const {
    const FieldTower* F = params_.F();
    FieldElement r = F->zero();
    for (int i = params_.M - 1; i >= 0; --i) {
        FieldElement row = F->zero();
        for (int j = params_.N - 1; j >= 0; --j) row = F->add(F->mul(row, b), at(i, j));
        r = F->add(F->mul(r, a), row);
    }
    return r;
}

UniPoly BiPoly::eval_x(const FieldElement& xi) const {
    const FieldTower* F = params_.F();
    std::vector<FieldElement> out((size_t)params_.N, F->zero());
    for (int j = 0; j < params_.N; ++j) {
        FieldElement col = F->zero();
        for (int i = params_.M - 1; i >= 0; --i) col = F->add(F->mul(col, xi), at(i, j));
        out[j] = col;
    }
    UniPoly r(F);
    return out.empty() ? r : UniPoly(out);
}

BiPoly BiPoly::shift_x() const {
    const FieldTower* F = params_.F();
    BiPoly r(params_);
    for (int j = 0; j < params_.N; ++j) {
        r.set(0, j, F->mul(params_.lambda1, at(params_.M - 1, j)));
        for (int i = 1; i < params_.M; ++i) r.set(i, j, at(i - 1, j));
    }
    return r;
}

BiPoly BiPoly::shift_y() const {
    const FieldTower* F = params_.F();
    BiPoly r(params_);
    for (int i = 0; i < params_.M; ++i) {
        r.set(i, 0, F->mul(params_.lambda2, at(i, params_.N - 1)));
        for (int j = 1; j < params_.N; ++j) r.set(i, j, at(i, j - 1));
    }
    return r;
}

BiPoly BiPoly::reciprocal() const {
    BiPoly r(params_);
    for (int i = 0; i < params_.M; ++i)
        for (int j = 0; j < params_.N; ++j)
            r.set(params_.M - 1 - i, params_.N - 1 - j, at(i, j));
    return r;
}

BiPoly BiPoly::scaled(const FieldElement& s) const {
    const FieldTower* F = params_.F();
    BiPoly r(params_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = F->mul(c_[k], s);
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    if (!a.params_.same(b.params_)) fail(Errc::ParamMismatch, "mismatched ring parameters");
    const FieldTower* F = a.params_.F();
    BiPoly r(a.params_);
    for (size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = F->add(a.c_[k], b.c_[k]);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    if (!a.params_.same(b.params_)) fail(Errc::ParamMismatch, "mismatched ring parameters");
    const FieldTower* F = a.params_.F();
    BiPoly r(a.params_);
    for (size_t k = 0; k < a.c_.size(); ++k) r.c_[k] = F->sub(a.c_[k], b.c_[k]);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (!a.params_.same(b.params_)) fail(Errc::ParamMismatch, "mismatched ring parameters");
    const FieldTower* F = a.params_.F();
    const CodeParams& P = a.params_;
    BiPoly r(P);
    for (int i1 = 0; i1 < P.M; ++i1)
        for (int j1 = 0; j1 < P.N; ++j1) {
            const FieldElement& ca = a.at(i1, j1);
            if (ca.is_zero()) continue;
            for (int i2 = 0; i2 < P.M; ++i2)
                for (int j2 = 0; j2 < P.N; ++j2) {
                    const FieldElement& cb = b.at(i2, j2);
                    if (cb.is_zero()) continue;
                    int i = i1 + i2, j = j1 + j2;
                    FieldElement c = F->mul(ca, cb);
                    if (i >= P.M) {
                        i -= P.M;
                        c = F->mul(c, P.lambda1);
                    }
                    if (j >= P.N) {
                        j -= P.N;
                        c = F->mul(c, P.lambda2);
                    }
                    r.set(i, j, F->add(r.at(i, j), c));
                }
        }
    return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    if (!a.params_.same(b.params_)) return false;
    for (size_t k = 0; k < a.c_.size(); ++k)
        if (!(a.c_[k] == b.c_[k])) return false;
    return true;
}

std::string element_token(const FieldTower& F, const FieldElement& x) {
    int64_t d = F.prime_digit(x);
    if (d >= 0) return std::to_string(d);
    return F.to_string(x);
}

FieldElement parse_element_token(const FieldTower& F, const std::string& tok) {
    if (tok.empty()) fail(Errc::SpecParseError, "empty element token");
    if (tok[0] == 'a' || tok[0] == 'A') {
        if (tok == "a" || tok == "A") return F.alpha();
        if (tok.size() < 3 || tok[1] != '^') fail(Errc::SpecParseError, "bad element token: " + tok);
        return F.alpha_pow(std::stoll(tok.substr(2)));
    }
    size_t pos = 0;
    int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) fail(Errc::SpecParseError, "bad element token: " + tok);
    return F.from_prime_scalar(v);
}

std::string BiPoly::str() const {
    const FieldTower* F = params_.F();
    std::ostringstream os;
    bool first = true;
    for (int i = params_.M - 1; i >= 0; --i)
        for (int j = params_.N - 1; j >= 0; --j) {
            const FieldElement& c = at(i, j);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            bool coeff_one = c == F->one();
            bool has_var = i > 0 || j > 0;
            if (!coeff_one || !has_var) os << element_token(*F, c);
            if (i > 0) {
                os << "x";
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                os << "y";
                if (j > 1) os << "^" << j;
            }
        }
    if (first) return "0";
    return os.str();
}

std::string BiPoly::grid_str() const {
    const FieldTower* F = params_.F();
    std::ostringstream os;
    for (int i = 0; i < params_.M; ++i) {
        for (int j = 0; j < params_.N; ++j) {
            if (j) os << " ";
            os << element_token(*F, at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

BiPoly parse_bipoly(const CodeParams& params, const std::string& text) {
    const FieldTower* F = params.F();
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch) && ch != '*') s.push_back(ch);
    if (s.empty()) fail(Errc::SpecParseError, "empty polynomial");
    std::vector<Term> terms;
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) fail(Errc::SpecParseError, "dangling sign in polynomial");
        FieldElement coeff = F->one();
        bool saw_any = false;
        // coefficient: digits or a^k
        if (std::isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            coeff = F->from_prime_scalar(std::stoll(s.substr(start, pos - start)));
            saw_any = true;
        } else if (s[pos] == 'a' || s[pos] == 'A') {
            ++pos;
            int64_t k = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t start = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (start == pos) fail(Errc::SpecParseError, "bad alpha power");
                k = std::stoll(s.substr(start, pos - start));
            }
            coeff = F->alpha_pow(k);
            saw_any = true;
        }
        int64_t ei = 0, ej = 0;
        while (pos < s.size() && (s[pos] == 'x' || s[pos] == 'y' || s[pos] == 'X' ||
                                  s[pos] == 'Y')) {
            char var = (char)std::tolower((unsigned char)s[pos]);
            ++pos;
            int64_t ex = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t start = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
                if (start == pos) fail(Errc::SpecParseError, "bad exponent");
                ex = std::stoll(s.substr(start, pos - start));
            }
            if (var == 'x')
                ei += ex;
            else
                ej += ex;
            saw_any = true;
        }
        if (!saw_any) fail(Errc::SpecParseError, "unreadable term near '" + s.substr(pos) + "'");
        if (sign < 0) coeff = F->neg(coeff);
        terms.push_back({ei, ej, coeff});
    }
    return BiPoly::reduce(params, terms);
}

BiPoly parse_grid(const CodeParams& params, const std::string& text) {
    const FieldTower* F = params.F();
    std::istringstream is(text);
    std::vector<Term> terms;
    std::string tok;
    for (int i = 0; i < params.M; ++i)
        for (int j = 0; j < params.N; ++j) {
            if (!(is >> tok))
                fail(Errc::SpecParseError, "grid needs " + std::to_string(params.area()) +
                                               " entries");
            terms.push_back({i, j, parse_element_token(*F, tok)});
        }
    if (is >> tok) fail(Errc::SpecParseError, "trailing data after grid");
    return BiPoly::reduce(params, terms);
}

}  // namespace bicycl
