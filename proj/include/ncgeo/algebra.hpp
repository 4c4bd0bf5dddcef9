#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncgeo/errors.hpp"
#include "ncgeo/linalg.hpp"
#include "ncgeo/scalar.hpp"

namespace ncgeo {

enum class PowerMode { Polynomial, Laurent };

using Exp = std::pair<long, long>; // (p, r) for x^p y^r

// Rectangular exponent window [pmin, pmax] x [rmin, rmax].
struct ExpWindow {
    long pmin, pmax, rmin, rmax;

    void validate() const {
        if (pmin > pmax || rmin > rmax) throw WindowEmpty();
    }
    bool contains(long p, long r) const { return p >= pmin && p <= pmax && r >= rmin && r <= rmax; }
    std::vector<Exp> monomials() const {
        validate();
        std::vector<Exp> out;
        for (long p = pmin; p <= pmax; ++p)
            for (long r = rmin; r <= rmax; ++r) out.emplace_back(p, r);
        return out;
    }
    static ExpWindow square(long bound) { return {0, bound, 0, bound}; }
};

// Element of the quantum plane in normal-ordered form: a finite sum
// sum c_{pr} x^p y^r with xy = q yx. Polynomial mode rejects negative
// exponents; Laurent mode admits formal inverses of x and y.
template <QField F>
class AlgElem {
  public:
    using Terms = std::map<Exp, F>;

    explicit AlgElem(PowerMode mode = PowerMode::Polynomial) : mode_(mode) {}

    static AlgElem zero(PowerMode mode = PowerMode::Polynomial) { return AlgElem(mode); }
    static AlgElem unit(PowerMode mode = PowerMode::Polynomial) { return monomial(F(1), 0, 0, mode); }
    static AlgElem x(PowerMode mode = PowerMode::Polynomial) { return monomial(F(1), 1, 0, mode); }
    static AlgElem y(PowerMode mode = PowerMode::Polynomial) { return monomial(F(1), 0, 1, mode); }
    static AlgElem scalar(const F& c, PowerMode mode = PowerMode::Polynomial) { return monomial(c, 0, 0, mode); }

    static AlgElem monomial(const F& c, long p, long r, PowerMode mode = PowerMode::Polynomial) {
        AlgElem e(mode);
        e.add_term(c, p, r);
        return e;
    }

    PowerMode mode() const { return mode_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    F coefficient(long p, long r) const {
        auto it = terms_.find({p, r});
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const F& c, long p, long r) {
        if (c == F(0)) return;
        if (mode_ == PowerMode::Polynomial && (p < 0 || r < 0))
            throw NegativeExponent("monomial x^" + std::to_string(p) + " y^" + std::to_string(r) +
                                   " in polynomial mode");
        auto it = terms_.find({p, r});
        if (it == terms_.end()) {
            terms_.emplace(Exp{p, r}, c);
        } else {
            it->second += c;
            if (it->second == F(0)) terms_.erase(it);
        }
    }

    AlgElem with_mode(PowerMode m) const {
        AlgElem out(m);
        for (const auto& [e, c] : terms_) out.add_term(c, e.first, e.second);
        return out;
    }
    AlgElem as_laurent() const { return with_mode(PowerMode::Laurent); }
    AlgElem as_polynomial() const { return with_mode(PowerMode::Polynomial); }

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
        a.require_same_mode(b);
        AlgElem out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(c, e.first, e.second);
        return out;
    }
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b) {
        a.require_same_mode(b);
        AlgElem out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(-c, e.first, e.second);
        return out;
    }
    AlgElem operator-() const {
        AlgElem out(mode_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    // Normal-ordered product: (x^p y^r)(x^s y^t) = q^{-rs} x^{p+s} y^{r+t},
    // extended bilinearly.
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
        a.require_same_mode(b);
        AlgElem out(a.mode_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                F c = ca * cb * q_power<F>(-ea.second * eb.first);
                out.add_term(c, ea.first + eb.first, ea.second + eb.second);
            }
        return out;
    }

    friend AlgElem operator*(const F& s, const AlgElem& a) {
        AlgElem out(a.mode_);
        for (const auto& [e, c] : a.terms_) out.add_term(s * c, e.first, e.second);
        return out;
    }
    friend AlgElem operator*(const AlgElem& a, const F& s) { return s * a; }

    AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
    AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
    AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }

    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a == b); }

    // Integer power. Negative exponents require a single invertible monomial.
    AlgElem pow(long n) const {
        if (n == 0) return unit(mode_);
        if (n > 0) {
            AlgElem acc = *this;
            for (long k = 1; k < n; ++k) acc *= *this;
            return acc;
        }
        if (terms_.size() != 1)
            throw NegativeExponent("negative power of a non-monomial element");
        const auto& [e, c] = *terms_.begin();
        // (c x^p y^r)^{-1} = q^{-pr} c^{-1} x^{-p} y^{-r}
        AlgElem inv = monomial(q_power<F>(-e.first * e.second) * (F(1) / c), -e.first, -e.second, mode_);
        return inv.pow(-n);
    }

    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
    }
    F scalar_value() const { return coefficient(0, 0); }

    // True iff every monomial has x-exponent >= power (membership in x^power A).
    bool in_left_ideal_x(long power) const {
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (e.first < power) return false;
        }
        return true;
    }

    bool is_central() const {
        AlgElem gx = x(mode_), gy = y(mode_);
        return *this * gx == gx * *this && *this * gy == gy * *this;
    }

    long min_x_exponent() const {
        long m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first || e.first < m) m = e.first;
            first = false;
        }
        return m;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string t = term_string(c, e.first, e.second);
            if (out.empty()) {
                out = t;
            } else if (t.size() > 1 && t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

  private:
    Terms terms_;
    PowerMode mode_;

    void require_same_mode(const AlgElem& o) const {
        if (mode_ != o.mode_) throw ModeMismatch();
    }

    static std::string monomial_string(long p, long r) {
        std::string m;
        if (p != 0) {
            m += "x";
            if (p != 1) m += "^" + std::to_string(p);
        }
        if (r != 0) {
            if (!m.empty()) m += "*";
            m += "y";
            if (r != 1) m += "^" + std::to_string(r);
        }
        return m;
    }

    static std::string term_string(const F& c, long p, long r) {
        std::string m = monomial_string(p, r);
        if (m.empty()) {
            std::string s = ncgeo::to_string(c);
            return scalar_is_atomic(c) ? s : "(" + s + ")";
        }
        if (c == F(1)) return m;
        if (c == F(-1)) return "-" + m;
        std::string s = ncgeo::to_string(c);
        if (!scalar_is_atomic(c)) s = "(" + s + ")";
        return s + "*" + m;
    }
};

// True when the printed form can be re-embedded into a product without
// parentheses.
inline bool scalar_is_atomic(const Rational&) { return true; }
inline bool scalar_is_atomic(const GenericQ& v) {
    if (!v.den().is_one()) return false;
    int nonzero = 0;
    for (const Rational& c : v.num().coefficients())
        if (!is_zero(c)) ++nonzero;
    return nonzero <= 1;
}
inline bool scalar_is_atomic(const Zeta3& v) { return is_zero(v.unit_part()) || is_zero(v.q_part()); }
inline bool scalar_is_atomic(const Gaussian& v) { return is_zero(v.real()) || is_zero(v.imag()); }

// Linear basis of {a : ax = xa, ay = ya} over monomials with exponents in
// [0, degree_bound]^2, assembled as an exact linear system on the unknown
// monomial coefficients.
template <QField F>
std::vector<AlgElem<F>> center_basis(long degree_bound, PowerMode mode = PowerMode::Polynomial) {
    ExpWindow window = ExpWindow::square(degree_bound);
    std::vector<Exp> mons = window.monomials();
    LinearSystem<F> sys(mons.size());
    AlgElem<F> gx = AlgElem<F>::x(mode), gy = AlgElem<F>::y(mode);
    for (size_t col = 0; col < mons.size(); ++col) {
        AlgElem<F> m = AlgElem<F>::monomial(F(1), mons[col].first, mons[col].second, mode);
        AlgElem<F> cx = m * gx - gx * m;
        AlgElem<F> cy = m * gy - gy * m;
        for (const auto& [e, c] : cx.terms()) sys.add({0, 0, e.first, e.second}, col, c);
        for (const auto& [e, c] : cy.terms()) sys.add({1, 0, e.first, e.second}, col, c);
    }
    std::vector<AlgElem<F>> basis;
    for (const auto& v : nullspace(sys.matrix())) {
        AlgElem<F> e(mode);
        for (size_t col = 0; col < mons.size(); ++col) e.add_term(v[col], mons[col].first, mons[col].second);
        basis.push_back(std::move(e));
    }
    return basis;
}

} // namespace ncgeo
