#pragma once

#include <string>
#include <type_traits>

#include "ncgeo/errors.hpp"
#include "ncgeo/polynomial.hpp"
#include "ncgeo/rational.hpp"

namespace ncgeo {

// ---------------------------------------------------------------------------
// GenericQ: the field of rational functions in q over the rationals.
// Canonical form: gcd(num, den) = 1 and den monic; zero is 0/1. Equal values
// therefore have identical representations.
// ---------------------------------------------------------------------------
class GenericQ {
  public:
    GenericQ() : num_(), den_(1) {}
    GenericQ(long v) : num_(v), den_(1) {} // NOLINT: implicit by design
    explicit GenericQ(Rational v) : num_(std::move(v)), den_(1) {}
    explicit GenericQ(QPoly p) : num_(std::move(p)), den_(1) {}
    GenericQ(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static GenericQ q() { return GenericQ(QPoly::variable()); }
    static GenericQ q_power(long n) {
        if (n >= 0) return GenericQ(QPoly::power(static_cast<unsigned>(n)));
        return GenericQ(QPoly(1), QPoly::power(static_cast<unsigned>(-n)));
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend GenericQ operator+(const GenericQ& a, const GenericQ& b) {
        return GenericQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend GenericQ operator-(const GenericQ& a, const GenericQ& b) {
        return GenericQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend GenericQ operator*(const GenericQ& a, const GenericQ& b) {
        return GenericQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend GenericQ operator/(const GenericQ& a, const GenericQ& b) {
        if (b.is_zero()) throw DivisionByZero();
        return GenericQ(a.num_ * b.den_, a.den_ * b.num_);
    }
    GenericQ operator-() const {
        GenericQ r = *this;
        r.num_ = -r.num_;
        return r;
    }
    GenericQ& operator+=(const GenericQ& o) { return *this = *this + o; }
    GenericQ& operator-=(const GenericQ& o) { return *this = *this - o; }
    GenericQ& operator*=(const GenericQ& o) { return *this = *this * o; }
    GenericQ& operator/=(const GenericQ& o) { return *this = *this / o; }

    friend bool operator==(const GenericQ& a, const GenericQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const GenericQ& a, const GenericQ& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        std::string n = num_.to_string();
        std::string d = den_.to_string();
        if (term_count(num_) > 1) n = "(" + n + ")";
        // den is monic, so a single-term denominator is a bare power of q
        if (term_count(den_) > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

  private:
    QPoly num_, den_;

    static int term_count(const QPoly& p) {
        int n = 0;
        for (const Rational& c : p.coefficients())
            if (!ncgeo::is_zero(c)) ++n;
        return n;
    }

    void canonicalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

inline bool is_zero(const GenericQ& v) { return v.is_zero(); }
inline std::string to_string(const GenericQ& v) { return v.to_string(); }

// ---------------------------------------------------------------------------
// Zeta3: the degree-2 extension of the rationals by a primitive cube root of
// unity q, stored on the basis {1, q} with q^2 = -1 - q applied eagerly.
// ---------------------------------------------------------------------------
class Zeta3 {
  public:
    Zeta3() : a_(0), b_(0) {}
    Zeta3(long v) : a_(v), b_(0) {} // NOLINT: implicit by design
    explicit Zeta3(Rational v) : a_(std::move(v)), b_(0) {}
    Zeta3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Zeta3 q() { return Zeta3(Rational(0), Rational(1)); }
    static Zeta3 q_power(long n) {
        long m = ((n % 3) + 3) % 3;
        if (m == 0) return Zeta3(1);
        if (m == 1) return q();
        return Zeta3(Rational(-1), Rational(-1)); // q^2 = -1 - q
    }

    const Rational& unit_part() const { return a_; }
    const Rational& q_part() const { return b_; }
    bool is_zero() const { return ncgeo::is_zero(a_) && ncgeo::is_zero(b_); }

    friend Zeta3 operator+(const Zeta3& x, const Zeta3& y) { return Zeta3(x.a_ + y.a_, x.b_ + y.b_); }
    friend Zeta3 operator-(const Zeta3& x, const Zeta3& y) { return Zeta3(x.a_ - y.a_, x.b_ - y.b_); }
    friend Zeta3 operator*(const Zeta3& x, const Zeta3& y) {
        // (a + bq)(c + dq) = ac - bd + (ad + bc - bd) q
        Rational bd = x.b_ * y.b_;
        return Zeta3(x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
    }
    friend Zeta3 operator/(const Zeta3& x, const Zeta3& y) { return x * y.inverse(); }
    Zeta3 operator-() const { return Zeta3(-a_, -b_); }
    Zeta3& operator+=(const Zeta3& o) { return *this = *this + o; }
    Zeta3& operator-=(const Zeta3& o) { return *this = *this - o; }
    Zeta3& operator*=(const Zeta3& o) { return *this = *this * o; }
    Zeta3& operator/=(const Zeta3& o) { return *this = *this / o; }

    Zeta3 inverse() const {
        // norm (a + bq)(a + b q^2) = a^2 - ab + b^2
        Rational n = a_ * a_ - a_ * b_ + b_ * b_;
        if (ncgeo::is_zero(n)) throw DivisionByZero();
        return Zeta3((a_ - b_) / n, -b_ / n);
    }

    friend bool operator==(const Zeta3& x, const Zeta3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Zeta3& x, const Zeta3& y) { return !(x == y); }

    std::string to_string() const {
        if (ncgeo::is_zero(b_)) return ncgeo::to_string(a_);
        std::string qpart;
        if (b_ == 1)
            qpart = "q";
        else if (b_ == -1)
            qpart = "-q";
        else
            qpart = ncgeo::to_string(b_) + "*q";
        if (ncgeo::is_zero(a_)) return qpart;
        if (b_ > 0) return ncgeo::to_string(a_) + " + " + qpart;
        return ncgeo::to_string(a_) + " - " + (b_ == -1 ? std::string("q") : ncgeo::to_string(Rational(-b_)) + "*q");
    }

  private:
    Rational a_, b_;
};

inline bool is_zero(const Zeta3& v) { return v.is_zero(); }
inline std::string to_string(const Zeta3& v) { return v.to_string(); }

// ---------------------------------------------------------------------------
// Gaussian: rationals extended by i with i^2 = -1 (matrix-geometry scalars).
// ---------------------------------------------------------------------------
class Gaussian {
  public:
    Gaussian() : re_(0), im_(0) {}
    Gaussian(long v) : re_(v), im_(0) {} // NOLINT: implicit by design
    explicit Gaussian(Rational v) : re_(std::move(v)), im_(0) {}
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return ncgeo::is_zero(re_) && ncgeo::is_zero(im_); }

    friend Gaussian operator+(const Gaussian& x, const Gaussian& y) { return Gaussian(x.re_ + y.re_, x.im_ + y.im_); }
    friend Gaussian operator-(const Gaussian& x, const Gaussian& y) { return Gaussian(x.re_ - y.re_, x.im_ - y.im_); }
    friend Gaussian operator*(const Gaussian& x, const Gaussian& y) {
        return Gaussian(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
    }
    friend Gaussian operator/(const Gaussian& x, const Gaussian& y) {
        Rational n = y.re_ * y.re_ + y.im_ * y.im_;
        if (ncgeo::is_zero(n)) throw DivisionByZero();
        return Gaussian((x.re_ * y.re_ + x.im_ * y.im_) / n, (x.im_ * y.re_ - x.re_ * y.im_) / n);
    }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }
    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& x, const Gaussian& y) { return x.re_ == y.re_ && x.im_ == y.im_; }
    friend bool operator!=(const Gaussian& x, const Gaussian& y) { return !(x == y); }

    std::string to_string() const {
        if (ncgeo::is_zero(im_)) return ncgeo::to_string(re_);
        std::string ipart;
        if (im_ == 1)
            ipart = "i";
        else if (im_ == -1)
            ipart = "-i";
        else
            ipart = ncgeo::to_string(im_) + "*i";
        if (ncgeo::is_zero(re_)) return ipart;
        if (im_ > 0) return ncgeo::to_string(re_) + " + " + ipart;
        return ncgeo::to_string(re_) + " - " + (im_ == -1 ? std::string("i") : ncgeo::to_string(Rational(-im_)) + "*i");
    }

  private:
    Rational re_, im_;
};

inline bool is_zero(const Gaussian& v) { return v.is_zero(); }
inline std::string to_string(const Gaussian& v) { return v.to_string(); }

// ---------------------------------------------------------------------------
// Field traits
// ---------------------------------------------------------------------------

template <class F>
struct has_deformation_parameter : std::false_type {};
template <>
struct has_deformation_parameter<GenericQ> : std::true_type {};
template <>
struct has_deformation_parameter<Zeta3> : std::true_type {};

// Fields that contain the deformation parameter q.
template <class F>
concept QField = has_deformation_parameter<F>::value;

template <QField F>
F q_power(long n) {
    return F::q_power(n);
}

template <class F>
std::string field_name();
template <>
inline std::string field_name<Rational>() {
    return "rational";
}
template <>
inline std::string field_name<GenericQ>() {
    return "generic";
}
template <>
inline std::string field_name<Zeta3>() {
    return "zeta3";
}
template <>
inline std::string field_name<Gaussian>() {
    return "gaussian";
}

// Q_n = sum_{k=1..n} q^{2(k-1)}, with Q_{-1} = Q_0 = 0.
template <QField F>
F qn_sum(long n) {
    if (n < -1) throw IndexOutOfRange("Q_n defined only for n >= -1");
    F acc(0);
    for (long k = 1; k <= n; ++k) acc += q_power<F>(2 * (k - 1));
    return acc;
}

// Pairs the order n with the value Q_n.
template <QField F>
struct QSum {
    long order;
    F value;
    static QSum make(long n) { return {n, qn_sum<F>(n)}; }
};

// Geometric extension of Q_n to arbitrary integers: (q^{2n} - 1)/(q^2 - 1).
// Agrees with qn_sum for n >= 0 and makes the commutation formulas valid on
// Laurent monomials. Distinct from qn_sum at n = -1.
template <QField F>
F q_geometric_sum(long n) {
    F acc(0);
    if (n >= 0) {
        for (long k = 0; k < n; ++k) acc += q_power<F>(2 * k);
    } else {
        for (long k = 1; k <= -n; ++k) acc -= q_power<F>(-2 * k);
    }
    return acc;
}

} // namespace ncgeo
