#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncgeo/algebra.hpp"

namespace ncgeo {

// Basis indices throughout: 0 = xi (= dx), 1 = eta (= dy).

// Element of the rank-2 free right module of 1-forms, in right normal form
// xi*b0 + eta*b1. The left-coefficient presentation is produced on demand.
template <QField F>
class OneForm {
  public:
    explicit OneForm(PowerMode mode = PowerMode::Polynomial)
        : b_{AlgElem<F>(mode), AlgElem<F>(mode)}, mode_(mode) {}

    static OneForm zero(PowerMode mode = PowerMode::Polynomial) { return OneForm(mode); }
    static OneForm basis(int i, PowerMode mode = PowerMode::Polynomial) {
        OneForm out(mode);
        out.b_[i] = AlgElem<F>::unit(mode);
        return out;
    }
    static OneForm from_right(AlgElem<F> b0, AlgElem<F> b1) {
        OneForm out(b0.mode());
        out.b_[0] = std::move(b0);
        out.b_[1] = std::move(b1);
        return out;
    }

    PowerMode mode() const { return mode_; }
    const AlgElem<F>& coefficient(int i) const { return b_[i]; }
    bool is_zero() const { return b_[0].is_zero() && b_[1].is_zero(); }

    friend OneForm operator+(const OneForm& a, const OneForm& b) {
        return from_right(a.b_[0] + b.b_[0], a.b_[1] + b.b_[1]);
    }
    friend OneForm operator-(const OneForm& a, const OneForm& b) {
        return from_right(a.b_[0] - b.b_[0], a.b_[1] - b.b_[1]);
    }
    OneForm operator-() const { return from_right(-b_[0], -b_[1]); }
    friend OneForm operator*(const F& s, const OneForm& a) { return from_right(s * a.b_[0], s * a.b_[1]); }

    // omega * a (right module action)
    OneForm right_mul(const AlgElem<F>& a) const { return from_right(b_[0] * a, b_[1] * a); }

    OneForm with_mode(PowerMode m) const { return from_right(b_[0].with_mode(m), b_[1].with_mode(m)); }

    friend bool operator==(const OneForm& a, const OneForm& b) { return a.b_[0] == b.b_[0] && a.b_[1] == b.b_[1]; }
    friend bool operator!=(const OneForm& a, const OneForm& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        const char* names[2] = {"xi", "eta"};
        for (int i = 0; i < 2; ++i) {
            if (b_[i].is_zero()) continue;
            std::string t = std::string(names[i]) + "*(" + b_[i].to_string() + ")";
            out += out.empty() ? t : " + " + t;
        }
        return out;
    }

  private:
    std::array<AlgElem<F>, 2> b_;
    PowerMode mode_;
};

// a * omega in right normal form, by the monomial commutation rules
//   x^p y^r xi  = q^{2p+r} xi x^p y^r
//   x^p y^r eta = q^{2r+p} eta x^p y^r + q^{2r}(q^2-1) Qhat_p xi x^{p-1} y^{r+1}
// where Qhat is the geometric extension of Q (valid on Laurent monomials).
template <QField F>
OneForm<F> left_mul(const AlgElem<F>& a, const OneForm<F>& omega) {
    const PowerMode mode = a.mode();
    const F q2m1 = q_power<F>(2) - F(1);
    AlgElem<F> out0(mode), out1(mode);
    for (const auto& [e, c] : a.terms()) {
        const long p = e.first, r = e.second;
        if (!omega.coefficient(0).is_zero()) {
            F s = c * q_power<F>(2 * p + r);
            out0 += AlgElem<F>::monomial(s, p, r, mode) * omega.coefficient(0);
        }
        if (!omega.coefficient(1).is_zero()) {
            F s = c * q_power<F>(2 * r + p);
            out1 += AlgElem<F>::monomial(s, p, r, mode) * omega.coefficient(1);
            F qhat = q_geometric_sum<F>(p);
            if (!(qhat == F(0))) {
                F t = c * q_power<F>(2 * r) * q2m1 * qhat;
                out0 += AlgElem<F>::monomial(t, p - 1, r + 1, mode) * omega.coefficient(1);
            }
        }
    }
    return OneForm<F>::from_right(std::move(out0), std::move(out1));
}

template <QField F>
OneForm<F> from_left(const AlgElem<F>& a0, const AlgElem<F>& a1) {
    OneForm<F> out = left_mul(a0, OneForm<F>::basis(0, a0.mode()));
    out = out + left_mul(a1, OneForm<F>::basis(1, a1.mode()));
    return out;
}

// Unique (a0, a1) with a0*xi + a1*eta = omega; inverts the rules above.
template <QField F>
std::array<AlgElem<F>, 2> to_left(const OneForm<F>& omega) {
    const PowerMode mode = omega.mode();
    AlgElem<F> a1(mode);
    for (const auto& [e, c] : omega.coefficient(1).terms())
        a1.add_term(c * q_power<F>(-(2 * e.second + e.first)), e.first, e.second);
    // what a1*eta contributes to the xi component
    OneForm<F> echo = left_mul(a1, OneForm<F>::basis(1, mode));
    AlgElem<F> rest = omega.coefficient(0) - echo.coefficient(0);
    AlgElem<F> a0(mode);
    for (const auto& [e, c] : rest.terms())
        a0.add_term(c * q_power<F>(-(2 * e.first + e.second)), e.first, e.second);
    return {std::move(a0), std::move(a1)};
}

// Exterior derivative A -> A^1: d(x^p y^r) = Q_p q^{2r} xi x^{p-1} y^r
// + q^p Q_r eta x^p y^{r-1}. Defined on polynomial elements only.
template <QField F>
OneForm<F> differential(const AlgElem<F>& a) {
    if (a.mode() != PowerMode::Polynomial) throw LaurentUnsupported("differential of a Laurent element");
    AlgElem<F> out0, out1;
    for (const auto& [e, c] : a.terms()) {
        const long p = e.first, r = e.second;
        if (p > 0) {
            F s = c * qn_sum<F>(p) * q_power<F>(2 * r);
            if (!(s == F(0))) out0.add_term(s, p - 1, r);
        }
        if (r > 0) {
            F s = c * q_power<F>(p) * qn_sum<F>(r);
            if (!(s == F(0))) out1.add_term(s, p, r - 1);
        }
    }
    return OneForm<F>::from_right(std::move(out0), std::move(out1));
}

// The one-dimensional space of 2-forms, written xi eta * c with
// eta xi = -q xi eta and xi^2 = eta^2 = 0.
template <QField F>
struct TwoForm {
    AlgElem<F> c;

    bool is_zero() const { return c.is_zero(); }
    friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.c == b.c; }
    friend bool operator!=(const TwoForm& a, const TwoForm& b) { return !(a == b); }
    std::string to_string() const { return c.is_zero() ? "0" : "xi*eta*(" + c.to_string() + ")"; }
};

// d(xi b0 + eta b1) = -xi ^ d(b0) - eta ^ d(b1), reduced to the xi eta basis.
template <QField F>
TwoForm<F> differential_form(const OneForm<F>& omega) {
    OneForm<F> d0 = differential(omega.coefficient(0));
    OneForm<F> d1 = differential(omega.coefficient(1));
    // xi ^ (xi u + eta v) = xi eta v,  eta ^ (xi u + eta v) = -q xi eta u
    return TwoForm<F>{q_power<F>(1) * d1.coefficient(0) - d0.coefficient(1)};
}

// Element of A^1 (x)_A A^1, free right module on the four basis tensors:
// sum theta^i (x) theta^j * c[i][j].
template <QField F>
class TensorOverA {
  public:
    explicit TensorOverA(PowerMode mode = PowerMode::Polynomial)
        : c_{{{AlgElem<F>(mode), AlgElem<F>(mode)}, {AlgElem<F>(mode), AlgElem<F>(mode)}}}, mode_(mode) {}

    static TensorOverA zero(PowerMode mode = PowerMode::Polynomial) { return TensorOverA(mode); }
    static TensorOverA basis(int i, int j, PowerMode mode = PowerMode::Polynomial) {
        TensorOverA out(mode);
        out.c_[i][j] = AlgElem<F>::unit(mode);
        return out;
    }

    PowerMode mode() const { return mode_; }
    const AlgElem<F>& coefficient(int i, int j) const { return c_[i][j]; }
    AlgElem<F>& coefficient(int i, int j) { return c_[i][j]; }

    bool is_zero() const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!c_[i][j].is_zero()) return false;
        return true;
    }

    friend TensorOverA operator+(const TensorOverA& a, const TensorOverA& b) {
        TensorOverA out(a.mode_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.c_[i][j] = a.c_[i][j] + b.c_[i][j];
        return out;
    }
    friend TensorOverA operator-(const TensorOverA& a, const TensorOverA& b) {
        TensorOverA out(a.mode_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.c_[i][j] = a.c_[i][j] - b.c_[i][j];
        return out;
    }
    TensorOverA operator-() const {
        TensorOverA out(mode_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.c_[i][j] = -c_[i][j];
        return out;
    }
    friend TensorOverA operator*(const F& s, const TensorOverA& a) {
        TensorOverA out(a.mode_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.c_[i][j] = s * a.c_[i][j];
        return out;
    }
    TensorOverA right_mul(const AlgElem<F>& a) const {
        TensorOverA out(mode_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.c_[i][j] = c_[i][j] * a;
        return out;
    }
    TensorOverA with_mode(PowerMode m) const {
        TensorOverA out(m);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.c_[i][j] = c_[i][j].with_mode(m);
        return out;
    }

    friend bool operator==(const TensorOverA& a, const TensorOverA& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!(a.c_[i][j] == b.c_[i][j])) return false;
        return true;
    }
    friend bool operator!=(const TensorOverA& a, const TensorOverA& b) { return !(a == b); }

    std::string to_string() const {
        if (is_zero()) return "0";
        const char* names[2] = {"xi", "eta"};
        std::string out;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (c_[i][j].is_zero()) continue;
                std::string t = std::string(names[i]) + " oxA " + names[j] + "*(" + c_[i][j].to_string() + ")";
                out += out.empty() ? t : " + " + t;
            }
        return out;
    }

  private:
    std::array<std::array<AlgElem<F>, 2>, 2> c_;
    PowerMode mode_;
};

namespace detail {

// x^p (theta^i (x) theta^j) expanded on the basis tensors; each entry is
// (target i, target j, scalar, trailing x-exponent, trailing y-exponent).
template <QField F>
struct TensorTerm {
    int i, j;
    F coef;
    long p, r;
};

template <QField F>
std::vector<TensorTerm<F>> x_power_tensor_rule(int i, int j, long p) {
    const F q2m1 = q_power<F>(2) - F(1);
    const F qhat = q_geometric_sum<F>(p);
    std::vector<TensorTerm<F>> out;
    if (i == 0 && j == 0) {
        out.push_back({0, 0, q_power<F>(4 * p), p, 0});
    } else if (i == 0 && j == 1) {
        out.push_back({0, 1, q_power<F>(3 * p), p, 0});
        out.push_back({0, 0, q2m1 * q_power<F>(2 * p) * qhat, p - 1, 1});
    } else if (i == 1 && j == 0) {
        out.push_back({1, 0, q_power<F>(3 * p), p, 0});
        out.push_back({0, 0, q2m1 * q_power<F>(2 * p - 1) * qhat, p - 1, 1});
    } else {
        const F qhat1 = q_geometric_sum<F>(p - 1);
        out.push_back({1, 1, q_power<F>(2 * p), p, 0});
        out.push_back({1, 0, q2m1 * q_power<F>(p) * qhat, p - 1, 1});
        out.push_back({0, 1, q2m1 * q_power<F>(p + 1) * qhat, p - 1, 1});
        out.push_back({0, 0, q_power<F>(2) * q2m1 * q2m1 * qhat * qhat1, p - 2, 2});
    }
    return out;
}

// Exponent of q in y^n (theta^i (x) theta^j) = q^{w n} theta^i (x) theta^j y^n.
inline long y_tensor_weight(int i, int j) {
    if (i == 0 && j == 0) return 2;
    if (i == 1 && j == 1) return 4;
    return 3;
}

} // namespace detail

// a * T in right normal form via the monomial tensor commutation rules.
template <QField F>
TensorOverA<F> left_mul_tensor(const AlgElem<F>& a, const TensorOverA<F>& t) {
    const PowerMode mode = t.mode();
    TensorOverA<F> out(mode);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const AlgElem<F>& w = t.coefficient(i, j);
            if (w.is_zero()) continue;
            for (const auto& [e, c] : a.terms()) {
                const long p = e.first, r = e.second;
                F yshift = q_power<F>(detail::y_tensor_weight(i, j) * r);
                for (const auto& term : detail::x_power_tensor_rule<F>(i, j, p)) {
                    if (term.coef == F(0)) continue;
                    AlgElem<F> trail = AlgElem<F>::monomial(c * yshift * term.coef, term.p, term.r + r, mode);
                    out.coefficient(term.i, term.j) += trail * w;
                }
            }
        }
    return out;
}

// omega (x) theta^j: coefficients of the first leg move across the tensor.
template <QField F>
TensorOverA<F> form_tensor_basis(const OneForm<F>& omega, int j) {
    const PowerMode mode = omega.mode();
    TensorOverA<F> out(mode);
    for (int i = 0; i < 2; ++i) {
        if (omega.coefficient(i).is_zero()) continue;
        OneForm<F> moved = left_mul(omega.coefficient(i), OneForm<F>::basis(j, mode));
        for (int l = 0; l < 2; ++l) out.coefficient(i, l) += moved.coefficient(l);
    }
    return out;
}

// theta^i (x) omega: second-leg coefficients are already right coefficients.
template <QField F>
TensorOverA<F> basis_tensor_form(int i, const OneForm<F>& omega) {
    TensorOverA<F> out(omega.mode());
    for (int j = 0; j < 2; ++j) out.coefficient(i, j) += omega.coefficient(j);
    return out;
}

// omega (x)_A rho for arbitrary 1-forms.
template <QField F>
TensorOverA<F> form_tensor_form(const OneForm<F>& omega, const OneForm<F>& rho) {
    TensorOverA<F> out(omega.mode());
    for (int j = 0; j < 2; ++j) {
        if (rho.coefficient(j).is_zero()) continue;
        out = out + form_tensor_basis(omega, j).right_mul(rho.coefficient(j));
    }
    return out;
}

// A bimodule map on A^1 (x)_A A^1 presented by its values on the four basis
// tensors and extended as a right-module map.
template <QField F>
struct SigmaMap {
    std::array<std::array<TensorOverA<F>, 2>, 2> image;

    TensorOverA<F> apply(const TensorOverA<F>& t) const {
        TensorOverA<F> out(t.mode());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (t.coefficient(i, j).is_zero()) continue;
                out = out + image[i][j].with_mode(t.mode()).right_mul(t.coefficient(i, j));
            }
        return out;
    }

    SigmaMap scaled(const F& s) const {
        SigmaMap out = *this;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) out.image[i][j] = s * out.image[i][j];
        return out;
    }

    // The braiding of the q-plane calculus
    //   sigma(xi (x) xi) = q^{-2} xi (x) xi
    //   sigma(xi (x) eta) = q^{-1} eta (x) xi
    //   sigma(eta (x) xi) = q^{-1} xi (x) eta - (1 - q^{-2}) eta (x) xi
    //   sigma(eta (x) eta) = q^{-2} eta (x) eta
    static SigmaMap standard(PowerMode mode = PowerMode::Polynomial) {
        using T = TensorOverA<F>;
        SigmaMap out;
        out.image[0][0] = q_power<F>(-2) * T::basis(0, 0, mode);
        out.image[0][1] = q_power<F>(-1) * T::basis(1, 0, mode);
        out.image[1][0] = q_power<F>(-1) * T::basis(0, 1, mode) - (F(1) - q_power<F>(-2)) * T::basis(1, 0, mode);
        out.image[1][1] = q_power<F>(-2) * T::basis(1, 1, mode);
        return out;
    }

    static SigmaMap standard_inverse(PowerMode mode = PowerMode::Polynomial) {
        using T = TensorOverA<F>;
        SigmaMap out;
        out.image[0][0] = q_power<F>(2) * T::basis(0, 0, mode);
        out.image[0][1] = (q_power<F>(2) - F(1)) * T::basis(0, 1, mode) + q_power<F>(1) * T::basis(1, 0, mode);
        out.image[1][0] = q_power<F>(1) * T::basis(0, 1, mode);
        out.image[1][1] = q_power<F>(2) * T::basis(1, 1, mode);
        return out;
    }
};

template <QField F>
TensorOverA<F> sigma(const TensorOverA<F>& t) {
    return SigmaMap<F>::standard(t.mode()).apply(t);
}

template <QField F>
TensorOverA<F> sigma_inverse(const TensorOverA<F>& t) {
    return SigmaMap<F>::standard_inverse(t.mode()).apply(t);
}

// Element of E (x) E with the tensor over the ground field, in the normal
// form induced by E (x) E = (+)_{i,j} A (x) A: slot (i,j) collects terms
// (x^p y^r) theta^i (x) theta^j (x^s y^t).
template <QField F>
class TensorOverC {
  public:
    using Key = std::pair<Exp, Exp>;
    using Slot = std::map<Key, F>;

    explicit TensorOverC(PowerMode mode = PowerMode::Polynomial) : mode_(mode) {}

    PowerMode mode() const { return mode_; }
    const Slot& slot(int i, int j) const { return s_[i][j]; }

    void add_term(int i, int j, Exp left, Exp right, const F& c) {
        if (c == F(0)) return;
        if (mode_ == PowerMode::Polynomial && (left.first < 0 || left.second < 0 || right.first < 0 || right.second < 0))
            throw NegativeExponent("tensor term with negative exponent in polynomial mode");
        auto& slot = s_[i][j];
        auto it = slot.find({left, right});
        if (it == slot.end()) {
            slot.emplace(Key{left, right}, c);
        } else {
            it->second += c;
            if (it->second == F(0)) slot.erase(it);
        }
    }

    static TensorOverC basis(int i, int j, PowerMode mode = PowerMode::Polynomial) {
        TensorOverC out(mode);
        out.add_term(i, j, {0, 0}, {0, 0}, F(1));
        return out;
    }

    // zeta (x) rho: first leg in left form, second leg in right form.
    static TensorOverC from_pair(const OneForm<F>& zeta, const OneForm<F>& rho) {
        TensorOverC out(zeta.mode());
        auto a = to_left(zeta);
        for (int i = 0; i < 2; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < 2; ++j) {
                if (rho.coefficient(j).is_zero()) continue;
                for (const auto& [ea, ca] : a[i].terms())
                    for (const auto& [eb, cb] : rho.coefficient(j).terms()) out.add_term(i, j, ea, eb, ca * cb);
            }
        }
        return out;
    }

    // (a theta^i c1) (x) (c2 theta^j b): middle coefficients are normalised
    // into the legs at construction.
    static TensorOverC from_legs(const AlgElem<F>& a, int i, const AlgElem<F>& c1, const AlgElem<F>& c2, int j,
                                 const AlgElem<F>& b) {
        const PowerMode mode = a.mode();
        auto leg1 = to_left(OneForm<F>::basis(i, mode).right_mul(c1));
        OneForm<F> leg2 = left_mul(c2, OneForm<F>::basis(j, mode).right_mul(b));
        TensorOverC out(mode);
        for (int k = 0; k < 2; ++k) {
            AlgElem<F> lk = a * leg1[k];
            if (lk.is_zero()) continue;
            for (int l = 0; l < 2; ++l)
                for (const auto& [ea, ca] : lk.terms())
                    for (const auto& [eb, cb] : leg2.coefficient(l).terms()) out.add_term(k, l, ea, eb, ca * cb);
        }
        return out;
    }

    friend TensorOverC operator+(const TensorOverC& x, const TensorOverC& y) {
        TensorOverC out = x;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const auto& [k, c] : y.s_[i][j]) out.add_term(i, j, k.first, k.second, c);
        return out;
    }
    friend TensorOverC operator-(const TensorOverC& x, const TensorOverC& y) {
        TensorOverC out = x;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const auto& [k, c] : y.s_[i][j]) out.add_term(i, j, k.first, k.second, -c);
        return out;
    }
    friend TensorOverC operator*(const F& s, const TensorOverC& x) {
        TensorOverC out(x.mode_);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (const auto& [k, c] : x.s_[i][j]) out.add_term(i, j, k.first, k.second, s * c);
        return out;
    }

    bool is_zero() const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!s_[i][j].empty()) return false;
        return true;
    }

    friend bool operator==(const TensorOverC& x, const TensorOverC& y) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (x.s_[i][j] != y.s_[i][j]) return false;
        return true;
    }
    friend bool operator!=(const TensorOverC& x, const TensorOverC& y) { return !(x == y); }

  private:
    Slot s_[2][2];
    PowerMode mode_;
};

// The rescaled braiding tau, slot-wise with outer coefficients kept:
//   tau(xi (x) xi) = xi (x) xi            tau(xi (x) eta) = q eta (x) xi
//   tau(eta (x) xi) = q xi (x) eta - (q^2-1) eta (x) xi
//   tau(eta (x) eta) = eta (x) eta
template <QField F>
TensorOverC<F> tau(const TensorOverC<F>& t) {
    TensorOverC<F> out(t.mode());
    const F q = q_power<F>(1);
    const F q2m1 = q_power<F>(2) - F(1);
    for (const auto& [k, c] : t.slot(0, 0)) out.add_term(0, 0, k.first, k.second, c);
    for (const auto& [k, c] : t.slot(0, 1)) out.add_term(1, 0, k.first, k.second, q * c);
    for (const auto& [k, c] : t.slot(1, 0)) {
        out.add_term(0, 1, k.first, k.second, q * c);
        out.add_term(1, 0, k.first, k.second, -(q2m1 * c));
    }
    for (const auto& [k, c] : t.slot(1, 1)) out.add_term(1, 1, k.first, k.second, c);
    return out;
}

// Quotient map E (x) E -> E (x)_A E: multiply the left coefficient through
// and absorb the right coefficient.
template <QField F>
TensorOverA<F> project_to_A(const TensorOverC<F>& t) {
    const PowerMode mode = t.mode();
    TensorOverA<F> out(mode);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [k, c] : t.slot(i, j)) {
                AlgElem<F> lhs = AlgElem<F>::monomial(c, k.first.first, k.first.second, mode);
                AlgElem<F> rhs = AlgElem<F>::monomial(F(1), k.second.first, k.second.second, mode);
                out = out + left_mul_tensor(lhs, TensorOverA<F>::basis(i, j, mode)).right_mul(rhs);
            }
    return out;
}

// Basis of {zeta : x zeta = zeta x, y zeta = zeta y} with left coefficients
// supported on total degree <= degree_bound, via nullspace on the unknown
// left coefficients.
template <QField F>
std::vector<OneForm<F>> center_oneforms(long degree_bound, PowerMode mode = PowerMode::Polynomial) {
    std::vector<Exp> mons;
    for (long p = 0; p <= degree_bound; ++p)
        for (long r = 0; p + r <= degree_bound; ++r) mons.emplace_back(p, r);

    // left forms of theta^i * x and theta^i * y
    std::array<std::array<AlgElem<F>, 2>, 2> gen_x, gen_y;
    for (int i = 0; i < 2; ++i) {
        gen_x[i] = to_left(OneForm<F>::basis(i, mode).right_mul(AlgElem<F>::x(mode)));
        gen_y[i] = to_left(OneForm<F>::basis(i, mode).right_mul(AlgElem<F>::y(mode)));
    }

    LinearSystem<F> sys(2 * mons.size());
    for (size_t col = 0; col < 2 * mons.size(); ++col) {
        int i = static_cast<int>(col / mons.size());
        Exp m = mons[col % mons.size()];
        AlgElem<F> a = AlgElem<F>::monomial(F(1), m.first, m.second, mode);
        // x zeta - zeta x and y zeta - zeta y in left coordinates
        for (int k = 0; k < 2; ++k) {
            AlgElem<F> cx = (k == i ? AlgElem<F>::x(mode) * a : AlgElem<F>::zero(mode)) - a * gen_x[i][k];
            AlgElem<F> cy = (k == i ? AlgElem<F>::y(mode) * a : AlgElem<F>::zero(mode)) - a * gen_y[i][k];
            for (const auto& [e, c] : cx.terms()) sys.add({0, k, e.first, e.second}, col, c);
            for (const auto& [e, c] : cy.terms()) sys.add({1, k, e.first, e.second}, col, c);
        }
    }

    std::vector<OneForm<F>> basis;
    for (const auto& v : nullspace(sys.matrix())) {
        AlgElem<F> a0(mode), a1(mode);
        for (size_t col = 0; col < mons.size(); ++col) {
            a0.add_term(v[col], mons[col].first, mons[col].second);
            a1.add_term(v[col + mons.size()], mons[col].first, mons[col].second);
        }
        basis.push_back(from_left(a0, a1));
    }
    return basis;
}

} // namespace ncgeo
