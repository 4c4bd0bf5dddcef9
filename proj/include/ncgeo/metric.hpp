#pragma once

#include <array>
#include <vector>

#include "ncgeo/forms.hpp"

namespace ncgeo {

// Metric on the bimodule of 1-forms: a bilinear pairing determined by the
// grid G[i][j] = g(theta^i (x) theta^j). tau-symmetry and middle-linearity
// are predicates on the grid, not invariants.
template <QField F>
class Metric {
  public:
    explicit Metric(PowerMode mode = PowerMode::Polynomial)
        : g_{{{AlgElem<F>(mode), AlgElem<F>(mode)}, {AlgElem<F>(mode), AlgElem<F>(mode)}}}, mode_(mode) {}

    static Metric from_grid(AlgElem<F> g00, AlgElem<F> g01, AlgElem<F> g10, AlgElem<F> g11) {
        Metric out(g00.mode());
        out.g_[0][0] = std::move(g00);
        out.g_[0][1] = std::move(g01);
        out.g_[1][0] = std::move(g10);
        out.g_[1][1] = std::move(g11);
        return out;
    }

    PowerMode mode() const { return mode_; }
    const AlgElem<F>& entry(int i, int j) const { return g_[i][j]; }
    AlgElem<F>& entry(int i, int j) { return g_[i][j]; }

    bool is_zero() const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!g_[i][j].is_zero()) return false;
        return true;
    }

    friend bool operator==(const Metric& a, const Metric& b) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!(a.g_[i][j] == b.g_[i][j])) return false;
        return true;
    }
    friend bool operator!=(const Metric& a, const Metric& b) { return !(a == b); }

    // g(sum a theta^i (x) theta^j b) = sum a G_{ij} b.
    AlgElem<F> eval(const TensorOverC<F>& t) const {
        PowerMode m = mode_ == PowerMode::Laurent || t.mode() == PowerMode::Laurent ? PowerMode::Laurent
                                                                                    : PowerMode::Polynomial;
        AlgElem<F> out(m);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (g_[i][j].is_zero()) continue;
                AlgElem<F> mid = g_[i][j].with_mode(m);
                for (const auto& [k, c] : t.slot(i, j)) {
                    AlgElem<F> lhs = AlgElem<F>::monomial(c, k.first.first, k.first.second, m);
                    AlgElem<F> rhs = AlgElem<F>::monomial(F(1), k.second.first, k.second.second, m);
                    out += lhs * mid * rhs;
                }
            }
        return out;
    }

    // g(zeta, rho) on 1-forms.
    AlgElem<F> eval_pair(const OneForm<F>& zeta, const OneForm<F>& rho) const {
        return eval(TensorOverC<F>::from_pair(zeta, rho));
    }

  private:
    std::array<std::array<AlgElem<F>, 2>, 2> g_;
    PowerMode mode_;
};

// g o tau = g, checked on the four generator tensors.
template <QField F>
bool is_tau_symmetric(const Metric<F>& g) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            TensorOverC<F> t = TensorOverC<F>::basis(i, j, g.mode());
            if (!(g.eval(tau(t)) == g.eval(t))) return false;
        }
    return true;
}

// The eight differences g(theta^i a (x) theta^j) - g(theta^i (x) a theta^j)
// for a in {x, y}, computed from first principles via the coefficient
// conversions. All zero iff g descends to the tensor product over A.
// Ordering: (i, j) lexicographic, generator x before y within each pair.
template <QField F>
std::array<AlgElem<F>, 8> middle_linearity_residuals(const Metric<F>& g) {
    const PowerMode mode = g.mode();
    std::array<AlgElem<F>, 8> out{AlgElem<F>(mode), AlgElem<F>(mode), AlgElem<F>(mode), AlgElem<F>(mode),
                                  AlgElem<F>(mode), AlgElem<F>(mode), AlgElem<F>(mode), AlgElem<F>(mode)};
    int idx = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int gen = 0; gen < 2; ++gen) {
                AlgElem<F> a = gen == 0 ? AlgElem<F>::x() : AlgElem<F>::y();
                // theta^i * a in left coefficients
                auto lc = to_left(OneForm<F>::basis(i).right_mul(a));
                // a * theta^j in right coefficients
                OneForm<F> rc = left_mul(a, OneForm<F>::basis(j));
                AlgElem<F> res(mode);
                for (int k = 0; k < 2; ++k) res += lc[k].with_mode(mode) * g.entry(k, j);
                for (int l = 0; l < 2; ++l) res -= g.entry(i, l) * rc.coefficient(l).with_mode(mode);
                out[idx++] = std::move(res);
            }
    return out;
}

template <QField F>
bool is_middle_linear(const Metric<F>& g) {
    for (const auto& r : middle_linearity_residuals(g))
        if (!r.is_zero()) return false;
    return true;
}

namespace detail {

// column layout for metric solution spaces: entry-major over the window
template <QField F>
Metric<F> metric_from_vector(const std::vector<F>& v, const std::vector<Exp>& mons, PowerMode mode) {
    Metric<F> g(mode);
    size_t col = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const Exp& m : mons) g.entry(i, j).add_term(v[col++], m.first, m.second);
    return g;
}

template <QField F>
std::vector<F> metric_to_vector(const Metric<F>& g, const std::vector<Exp>& mons) {
    std::vector<F> v;
    v.reserve(4 * mons.size());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const Exp& m : mons) v.push_back(g.entry(i, j).coefficient(m.first, m.second));
    return v;
}

} // namespace detail

// Basis of the space of middle-linear metrics with entries supported in the
// window, optionally intersected with the tau-symmetry condition. Assembled
// as an exact linear system on the unknown entry coefficients.
template <QField F>
std::vector<Metric<F>> solve_middle_linear(const ExpWindow& window, bool tau_symmetric,
                                           PowerMode mode = PowerMode::Polynomial) {
    window.validate();
    if (mode == PowerMode::Polynomial && (window.pmin < 0 || window.rmin < 0))
        throw NegativeExponent("window reaches negative exponents in polynomial mode");
    std::vector<Exp> mons = window.monomials();
    const size_t n = mons.size();
    LinearSystem<F> sys(4 * n);
    const F q = q_power<F>(1);
    for (size_t col = 0; col < 4 * n; ++col) {
        int entry = static_cast<int>(col / n);
        const Exp m = mons[col % n];
        Metric<F> unit(mode);
        unit.entry(entry / 2, entry % 2) = AlgElem<F>::monomial(F(1), m.first, m.second, mode);
        auto residuals = middle_linearity_residuals(unit);
        for (int ridx = 0; ridx < 8; ++ridx)
            for (const auto& [e, c] : residuals[ridx].terms()) sys.add({ridx, 0, e.first, e.second}, col, c);
        if (tau_symmetric) {
            // G_{12} = q G_{21}, one row per window monomial
            if (entry == 1) sys.add({8, 0, m.first, m.second}, col, F(1));
            if (entry == 2) sys.add({8, 0, m.first, m.second}, col, -q);
        }
    }
    std::vector<Metric<F>> basis;
    for (const auto& v : nullspace(sys.matrix())) basis.push_back(detail::metric_from_vector<F>(v, mons, mode));
    return basis;
}

// The closed-form family of middle-linear metrics at the cube root of unity,
// parametrised by four central elements:
//   g(xi, xi)  = x^3 Z x y            g(xi, eta) = q x^3 Z y^2 + x^3 Y
//   g(eta, xi) = x^3 Z y^2 + x^3 W    g(eta, eta) = U x^2 y^2 + (qY + W) x^2 y + q^2 Z x^2 y^3
// tau-symmetric precisely when Y = qW.
inline Metric<Zeta3> ml_family_zeta3(const AlgElem<Zeta3>& Z, const AlgElem<Zeta3>& Y, const AlgElem<Zeta3>& W,
                                     const AlgElem<Zeta3>& U) {
    for (const auto* p : {&Z, &Y, &W, &U})
        if (!p->is_central()) throw NotCentral("family parameters must be central");
    using A = AlgElem<Zeta3>;
    const Zeta3 q = Zeta3::q();
    A x3 = A::monomial(Zeta3(1), 3, 0);
    A xy = A::monomial(Zeta3(1), 1, 1);
    A y2 = A::monomial(Zeta3(1), 0, 2);
    A x2y = A::monomial(Zeta3(1), 2, 1);
    A x2y2 = A::monomial(Zeta3(1), 2, 2);
    A x2y3 = A::monomial(Zeta3(1), 2, 3);
    return Metric<Zeta3>::from_grid(x3 * Z * xy,                                      //
                                    q * (x3 * Z * y2) + x3 * Y,                       //
                                    x3 * Z * y2 + x3 * W,                             //
                                    U * x2y2 + (q * Y + W) * x2y + (q * q) * (Z * x2y3));
}

// The three-parameter Laurent family of middle-linear metrics for generic q:
//   g(xi, xi)  = a x^{-2} y^4
//   g(xi, eta) = q x^{-3} (b y^3 + q^3 a y^5)
//   g(eta, xi) = x^{-3} (b y^3 + q^3 a y^5)
//   g(eta, eta) = x^{-4} (c y^2 + q^3 (q^2+1) b y^4 + q^8 a y^6)
inline Metric<GenericQ> ml_family_laurent(const GenericQ& a, const GenericQ& b, const GenericQ& c) {
    using A = AlgElem<GenericQ>;
    const PowerMode L = PowerMode::Laurent;
    const GenericQ q = GenericQ::q();
    auto mono = [&](const GenericQ& s, long p, long r) { return A::monomial(s, p, r, L); };
    A g00 = mono(a, -2, 4);
    A inner = mono(b, 0, 3) + mono(q_power<GenericQ>(3) * a, 0, 5);
    A g01 = mono(q, -3, 0) * inner;
    A g10 = mono(GenericQ(1), -3, 0) * inner;
    A g11 = mono(GenericQ(1), -4, 0) *
            (mono(c, 0, 2) + mono(q_power<GenericQ>(3) * (q * q + GenericQ(1)) * b, 0, 4) +
             mono(q_power<GenericQ>(8) * a, 0, 6));
    return Metric<GenericQ>::from_grid(g00, g01, g10, g11);
}

} // namespace ncgeo
