#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ncgeo/errors.hpp"
#include "ncgeo/rational.hpp"

namespace ncgeo {

// Dense univariate polynomial over the rationals, used as the building block
// of the rational-function field in q. Coefficients are stored ascending with
// no trailing zeros, so equal polynomials have identical representations.
class QPoly {
  public:
    QPoly() = default;
    QPoly(long v) { // NOLINT: implicit by design, mirrors integer literals
        if (v != 0) coeff_.push_back(Rational(v));
    }
    explicit QPoly(Rational v) {
        if (!ncgeo::is_zero(v)) coeff_.push_back(std::move(v));
    }
    explicit QPoly(std::vector<Rational> ascending) : coeff_(std::move(ascending)) { prune(); }

    static QPoly variable() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    // x^n for n >= 0
    static QPoly power(unsigned n) {
        std::vector<Rational> c(n + 1, Rational(0));
        c[n] = 1;
        return QPoly(std::move(c));
    }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeff_.size()) - 1; }

    const Rational& leading() const {
        if (is_zero()) throw DivisionByZero("leading coefficient of zero polynomial");
        return coeff_.back();
    }

    Rational coefficient(size_t i) const { return i < coeff_.size() ? coeff_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i) c[i] += a.coeff_[i];
        for (size_t i = 0; i < b.coeff_.size(); ++i) c[i] += b.coeff_[i];
        return QPoly(std::move(c));
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rational> c(std::max(a.coeff_.size(), b.coeff_.size()), Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i) c[i] += a.coeff_[i];
        for (size_t i = 0; i < b.coeff_.size(); ++i) c[i] -= b.coeff_[i];
        return QPoly(std::move(c));
    }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rational> c(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i) {
            if (ncgeo::is_zero(a.coeff_[i])) continue;
            for (size_t j = 0; j < b.coeff_.size(); ++j) c[i + j] += a.coeff_[i] * b.coeff_[j];
        }
        return QPoly(std::move(c));
    }

    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    QPoly scaled(const Rational& s) const {
        if (ncgeo::is_zero(s)) return QPoly();
        QPoly r = *this;
        for (auto& c : r.coeff_) c *= s;
        return r;
    }

    QPoly monic() const {
        if (is_zero()) return *this;
        return scaled(Rational(1) / leading());
    }

    // Euclidean division; the divisor must be nonzero.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        QPoly rem = *this;
        std::vector<Rational> quot;
        if (degree() >= d.degree()) quot.assign(degree() - d.degree() + 1, Rational(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            long shift = rem.degree() - d.degree();
            Rational f = rem.leading() / d.leading();
            quot[shift] = f;
            std::vector<Rational> c = rem.coeff_;
            for (size_t i = 0; i < d.coeff_.size(); ++i) c[i + shift] -= f * d.coeff_[i];
            c.pop_back(); // leading term cancels exactly
            rem = QPoly(std::move(c));
        }
        return {QPoly(std::move(quot)), std::move(rem)};
    }

    friend QPoly operator/(const QPoly& a, const QPoly& b) { return a.divmod(b).first; }
    friend QPoly operator%(const QPoly& a, const QPoly& b) { return a.divmod(b).second; }

    // Monic gcd; remainders are renormalised to monic at every step to keep
    // coefficient growth in check.
    static QPoly gcd(QPoly a, QPoly b) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            QPoly r = (a % b);
            a = std::move(b);
            b = r.is_zero() ? r : r.monic();
        }
        return a;
    }

    std::string to_string(const std::string& var = "q") const;

  private:
    std::vector<Rational> coeff_;

    void prune() {
        while (!coeff_.empty() && ncgeo::is_zero(coeff_.back())) coeff_.pop_back();
    }
};

inline bool is_zero(const QPoly& p) { return p.is_zero(); }

inline std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
        const Rational c = coefficient(static_cast<size_t>(d));
        if (ncgeo::is_zero(c)) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = abs == 1;
        if (d == 0) {
            out += ncgeo::to_string(abs);
        } else {
            if (!unit) out += ncgeo::to_string(abs) + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

} // namespace ncgeo
