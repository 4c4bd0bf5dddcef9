#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "ncgeo/errors.hpp"
#include "ncgeo/scalar.hpp"

namespace ncgeo {
namespace matrixgeo {

// Desk-scale model of the matrix geometry: A = Poly(t1, t2) (x) M_2 over the
// Gaussian rationals, with the derivation-based calculus. The 1-form basis
// has m + n^2 - 1 = 5 elements: two de Rham directions dual to the
// coordinate partials and three inner directions dual to ad(lambda_a) for
// the traceless basis lambda_1, lambda_2, lambda_3 (Pauli matrices, so all
// structure constants are Gaussian rational).

inline constexpr int kCoords = 2;
inline constexpr int kBasis = 5;

struct Mat2 {
    std::array<Gaussian, 4> a{Gaussian(0), Gaussian(0), Gaussian(0), Gaussian(0)};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {{Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(1)}}; }
    static Mat2 pauli(int k) {
        Gaussian i = Gaussian::i();
        switch (k) {
            case 0: return {{Gaussian(0), Gaussian(1), Gaussian(1), Gaussian(0)}};
            case 1: return {{Gaussian(0), -i, i, Gaussian(0)}};
            default: return {{Gaussian(1), Gaussian(0), Gaussian(0), Gaussian(-1)}};
        }
    }

    const Gaussian& at(int r, int c) const { return a[2 * r + c]; }
    Gaussian& at(int r, int c) { return a[2 * r + c]; }

    bool is_zero() const {
        for (const auto& e : a)
            if (!e.is_zero()) return false;
        return true;
    }
    bool is_scalar() const { return a[1].is_zero() && a[2].is_zero() && a[0] == a[3]; }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        Mat2 out;
        for (int k = 0; k < 4; ++k) out.a[k] = x.a[k] + y.a[k];
        return out;
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        Mat2 out;
        for (int k = 0; k < 4; ++k) out.a[k] = x.a[k] - y.a[k];
        return out;
    }
    Mat2 operator-() const {
        Mat2 out;
        for (int k = 0; k < 4; ++k) out.a[k] = -a[k];
        return out;
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out.at(r, c) = x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
        return out;
    }
    friend Mat2 operator*(const Gaussian& s, const Mat2& x) {
        Mat2 out;
        for (int k = 0; k < 4; ++k) out.a[k] = s * x.a[k];
        return out;
    }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a; }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

inline Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

// Polynomial in the two commuting coordinates with 2x2 matrix coefficients.
class MatFunc {
  public:
    using Key = std::pair<int, int>;

    MatFunc() = default;
    static MatFunc constant(Mat2 m) {
        MatFunc out;
        out.add(0, 0, std::move(m));
        return out;
    }
    static MatFunc identity() { return constant(Mat2::identity()); }
    static MatFunc coordinate(int mu) {
        MatFunc out;
        out.add(mu == 0 ? 1 : 0, mu == 0 ? 0 : 1, Mat2::identity());
        return out;
    }
    static MatFunc lambda(int k) { return constant(Mat2::pauli(k)); }

    const std::map<Key, Mat2>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int d1, int d2, const Mat2& m) {
        if (m.is_zero()) return;
        auto it = terms_.find({d1, d2});
        if (it == terms_.end()) {
            terms_.emplace(Key{d1, d2}, m);
        } else {
            it->second = it->second + m;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MatFunc operator+(const MatFunc& x, const MatFunc& y) {
        MatFunc out = x;
        for (const auto& [k, m] : y.terms_) out.add(k.first, k.second, m);
        return out;
    }
    friend MatFunc operator-(const MatFunc& x, const MatFunc& y) {
        MatFunc out = x;
        for (const auto& [k, m] : y.terms_) out.add(k.first, k.second, -m);
        return out;
    }
    MatFunc operator-() const {
        MatFunc out;
        for (const auto& [k, m] : terms_) out.terms_.emplace(k, -m);
        return out;
    }
    friend MatFunc operator*(const MatFunc& x, const MatFunc& y) {
        MatFunc out;
        for (const auto& [kx, mx] : x.terms_)
            for (const auto& [ky, my] : y.terms_) out.add(kx.first + ky.first, kx.second + ky.second, mx * my);
        return out;
    }
    friend MatFunc operator*(const Gaussian& s, const MatFunc& x) {
        MatFunc out;
        for (const auto& [k, m] : x.terms_) out.add(k.first, k.second, s * m);
        return out;
    }
    MatFunc& operator+=(const MatFunc& o) { return *this = *this + o; }
    MatFunc& operator-=(const MatFunc& o) { return *this = *this - o; }

    friend bool operator==(const MatFunc& x, const MatFunc& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const MatFunc& x, const MatFunc& y) { return !(x == y); }

    MatFunc partial(int mu) const {
        MatFunc out;
        for (const auto& [k, m] : terms_) {
            int d = mu == 0 ? k.first : k.second;
            if (d == 0) continue;
            Gaussian s{Rational(d)};
            out.add(mu == 0 ? k.first - 1 : k.first, mu == 0 ? k.second : k.second - 1, s * m);
        }
        return out;
    }

    // Z(A): scalar-matrix coefficients throughout.
    bool is_central() const {
        for (const auto& [k, m] : terms_) {
            (void)k;
            if (!m.is_scalar()) return false;
        }
        return true;
    }

  private:
    std::map<Key, Mat2> terms_;
};

inline MatFunc commutator(const MatFunc& x, const MatFunc& y) { return x * y - y * x; }

// 1-form on the central 5-element basis; coefficients commute past the basis
// symbols, so one coefficient per direction is a faithful normal form.
struct MGOneForm {
    std::array<MatFunc, kBasis> comp;

    bool is_zero() const {
        for (const auto& c : comp)
            if (!c.is_zero()) return false;
        return true;
    }
    friend MGOneForm operator+(const MGOneForm& x, const MGOneForm& y) {
        MGOneForm out;
        for (int i = 0; i < kBasis; ++i) out.comp[i] = x.comp[i] + y.comp[i];
        return out;
    }
    friend MGOneForm operator-(const MGOneForm& x, const MGOneForm& y) {
        MGOneForm out;
        for (int i = 0; i < kBasis; ++i) out.comp[i] = x.comp[i] - y.comp[i];
        return out;
    }
    friend bool operator==(const MGOneForm& x, const MGOneForm& y) { return x.comp == y.comp; }
    friend bool operator!=(const MGOneForm& x, const MGOneForm& y) { return !(x == y); }

    MGOneForm left_mul(const MatFunc& a) const {
        MGOneForm out;
        for (int i = 0; i < kBasis; ++i) out.comp[i] = a * comp[i];
        return out;
    }
    MGOneForm right_mul(const MatFunc& a) const {
        MGOneForm out;
        for (int i = 0; i < kBasis; ++i) out.comp[i] = comp[i] * a;
        return out;
    }
};

// da = sum_mu (partial_mu a) theta^mu + sum_b [lambda_b, a] theta^{2+b}.
inline MGOneForm differential_mg(const MatFunc& a) {
    MGOneForm out;
    for (int mu = 0; mu < kCoords; ++mu) out.comp[mu] = a.partial(mu);
    for (int b = 0; b < 3; ++b) out.comp[kCoords + b] = commutator(MatFunc::lambda(b), a);
    return out;
}

using MetricGrid = std::array<std::array<MatFunc, kBasis>, kBasis>;

// Metric determined by a symmetric grid G^{ij} = g(theta^i (x) theta^j);
// middle-linear precisely when every entry is central.
class MGMetric {
  public:
    explicit MGMetric(MetricGrid grid) : g_(std::move(grid)) {
        for (int i = 0; i < kBasis; ++i)
            for (int j = i + 1; j < kBasis; ++j)
                if (!(g_[i][j] == g_[j][i])) throw NotSymmetric("metric grid must be symmetric");
    }

    const MetricGrid& grid() const { return g_; }
    const MatFunc& entry(int i, int j) const { return g_[i][j]; }

    // g(sum a_i theta^i, sum theta^j b_j) = sum a_i G^{ij} b_j
    MatFunc eval(const MGOneForm& zeta, const MGOneForm& rho) const {
        MatFunc out;
        for (int i = 0; i < kBasis; ++i)
            for (int j = 0; j < kBasis; ++j) {
                if (zeta.comp[i].is_zero() || g_[i][j].is_zero() || rho.comp[j].is_zero()) continue;
                out += zeta.comp[i] * g_[i][j] * rho.comp[j];
            }
        return out;
    }

    bool is_middle_linear() const {
        for (int i = 0; i < kBasis; ++i)
            for (int j = 0; j < kBasis; ++j)
                if (!g_[i][j].is_central()) return false;
        return true;
    }

    // residuals g(theta^i a (x) theta^j) - g(theta^i (x) a theta^j) = [a, G^{ij}]
    // for a running over the algebra generators; all zero iff middle-linear.
    bool middle_linearity_by_residuals() const {
        std::array<MatFunc, 3> gens = {MatFunc::lambda(0), MatFunc::lambda(1), MatFunc::lambda(2)};
        for (const auto& a : gens)
            for (int i = 0; i < kBasis; ++i)
                for (int j = 0; j < kBasis; ++j)
                    if (!commutator(a, g_[i][j]).is_zero()) return false;
        return true;
    }

  private:
    MetricGrid g_;
};

using ChristoffelGrid = std::array<std::array<std::array<MatFunc, kBasis>, kBasis>, kBasis>;

// nabla theta^i = theta^j (x) theta^k Gamma[i][j][k] on the central basis.
struct MGChristoffel {
    ChristoffelGrid gamma;
};

// Compatibility on the centre: the index swap Gammatilde^i_{kj} = Gamma^i_{jk}.
inline bool sigma_compat_mg(const MGChristoffel& left, const MGChristoffel& right) {
    for (int i = 0; i < kBasis; ++i)
        for (int j = 0; j < kBasis; ++j)
            for (int k = 0; k < kBasis; ++k)
                if (!(right.gamma[i][k][j] == left.gamma[i][j][k])) return false;
    return true;
}

// Compatibility on the whole bimodule: the swap plus centrality of the
// symbols (membership in the commutative factor).
inline bool whole_bimodule_mg(const MGChristoffel& left, const MGChristoffel& right) {
    if (!sigma_compat_mg(left, right)) return false;
    for (int i = 0; i < kBasis; ++i)
        for (int j = 0; j < kBasis; ++j)
            for (int k = 0; k < kBasis; ++k)
                if (!left.gamma[i][j][k].is_central()) return false;
    return true;
}

// Direct residual of the sigma-compatibility condition on a central form
// zeta = c_i theta^i (central coefficients): nabla^L zeta - sigma(nabla^R zeta)
// where sigma flips the basis tensors. Returns the 5x5 grid of coefficients.
inline std::array<std::array<MatFunc, kBasis>, kBasis> sigma_compat_direct_mg(const MGChristoffel& left,
                                                                              const MGChristoffel& right,
                                                                              const std::array<MatFunc, kBasis>& c) {
    std::array<std::array<MatFunc, kBasis>, kBasis> residual{};
    for (int i = 0; i < kBasis; ++i) {
        MGOneForm dc = differential_mg(c[i]);
        for (int j = 0; j < kBasis; ++j)
            for (int k = 0; k < kBasis; ++k) {
                // nabla^L: d c_i (x) theta^i + c_i Gamma^i_{jk}
                MatFunc lhs = c[i] * left.gamma[i][j][k];
                if (k == i) lhs += dc.comp[j];
                // sigma(nabla^R): swap of theta^j (x) theta^k Gammatilde^i_{jk} c_i
                // plus sigma(theta^i (x) d c_i)
                MatFunc rhs = right.gamma[i][k][j] * c[i];
                if (k == i) rhs += dc.comp[j];
                residual[j][k] += lhs - rhs;
            }
    }
    return residual;
}

// dg^{ij} - (Gamma^i_{kl} g^{lj} + g^{il} Gammatilde^j_{lk}) theta^k.
inline std::array<std::array<MGOneForm, kBasis>, kBasis> metric_compat_mg(const MGChristoffel& left,
                                                                          const MGChristoffel& right,
                                                                          const MGMetric& g) {
    std::array<std::array<MGOneForm, kBasis>, kBasis> out{};
    for (int i = 0; i < kBasis; ++i)
        for (int j = 0; j < kBasis; ++j) {
            MGOneForm p = differential_mg(g.entry(i, j));
            for (int k = 0; k < kBasis; ++k) {
                MatFunc drop;
                for (int l = 0; l < kBasis; ++l)
                    drop += left.gamma[i][k][l] * g.entry(l, j) + g.entry(i, l) * right.gamma[j][l][k];
                p.comp[k] -= drop;
            }
            out[i][j] = std::move(p);
        }
    return out;
}

// From-first-principles evaluation of the metric-compatibility condition on
// a pair of arbitrary 1-forms (the independent route used to cross-check the
// display above): d g(zeta, rho) - g_check(nabla^L zeta, rho) - g_hat(zeta, nabla^R rho).
inline MGOneForm metric_compat_direct_mg(const MGChristoffel& left, const MGChristoffel& right, const MGMetric& g,
                                         const MGOneForm& zeta, const MGOneForm& rho) {
    MGOneForm out = differential_mg(g.eval(zeta, rho));
    // nabla^L zeta: slots T[j][k] = sum_i zeta_i Gamma^i_{jk} + (d zeta_i)_j delta_{ik}
    std::array<std::array<MatFunc, kBasis>, kBasis> tl{};
    for (int i = 0; i < kBasis; ++i) {
        MGOneForm dz = differential_mg(zeta.comp[i]);
        for (int j = 0; j < kBasis; ++j) {
            for (int k = 0; k < kBasis; ++k) tl[j][k] += zeta.comp[i] * left.gamma[i][j][k];
            tl[j][i] += dz.comp[j];
        }
    }
    // g_check: theta^j T[j][k] g(theta^k, rho)
    for (int j = 0; j < kBasis; ++j)
        for (int k = 0; k < kBasis; ++k) {
            if (tl[j][k].is_zero()) continue;
            MatFunc val;
            for (int l = 0; l < kBasis; ++l) val += g.entry(k, l) * rho.comp[l];
            out.comp[j] -= tl[j][k] * val;
        }
    // nabla^R rho: slots S[k][l] = sum_j Gammatilde^j_{kl} rho_j + (d rho_k)_l
    std::array<std::array<MatFunc, kBasis>, kBasis> tr{};
    for (int j = 0; j < kBasis; ++j) {
        MGOneForm dr = differential_mg(rho.comp[j]);
        for (int k = 0; k < kBasis; ++k) {
            for (int l = 0; l < kBasis; ++l) tr[k][l] += right.gamma[j][k][l] * rho.comp[j];
            tr[j][k] += dr.comp[k];
        }
    }
    // g_hat: g(zeta, theta^k) S[k][l] theta^l
    for (int k = 0; k < kBasis; ++k) {
        MatFunc val;
        for (int i = 0; i < kBasis; ++i) val += zeta.comp[i] * g.entry(i, k);
        for (int l = 0; l < kBasis; ++l) {
            if (tr[k][l].is_zero()) continue;
            out.comp[l] -= val * tr[k][l];
        }
    }
    return out;
}

} // namespace matrixgeo
} // namespace ncgeo
