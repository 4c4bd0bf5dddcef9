#pragma once

#include <array>
#include <vector>

#include "ncgeo/connection.hpp"
#include "ncgeo/metric.hpp"

namespace ncgeo {

// Extensions of the metric to mixed tensor arguments:
//   g_check(alpha (x)_A zeta, rho) = alpha g(zeta, rho)
//   g_hat(zeta, rho (x)_A alpha)   = g(zeta, rho) alpha
template <QField F>
OneForm<F> g_check(const OneForm<F>& alpha, const OneForm<F>& zeta, const OneForm<F>& rho, const Metric<F>& g) {
    return alpha.right_mul(g.eval_pair(zeta, rho));
}

template <QField F>
OneForm<F> g_hat(const OneForm<F>& zeta, const OneForm<F>& rho, const OneForm<F>& alpha, const Metric<F>& g) {
    return left_mul(g.eval_pair(zeta, rho), alpha);
}

// g_check applied to a full element of A^1 (x)_A A^1 against rho:
// sum_j theta^j g(theta^k c_jk, rho).
template <QField F>
OneForm<F> g_check_tensor(const TensorOverA<F>& t, const OneForm<F>& rho, const Metric<F>& g) {
    OneForm<F> out(rho.mode());
    for (int j = 0; j < 2; ++j) {
        OneForm<F> second = OneForm<F>::from_right(t.coefficient(j, 0), t.coefficient(j, 1));
        if (second.is_zero()) continue;
        out = out + OneForm<F>::basis(j, rho.mode()).right_mul(g.eval_pair(second, rho));
    }
    return out;
}

// g_hat applied against a full element of A^1 (x)_A A^1:
// sum_k g(zeta, theta^k) (theta^l c_kl).
template <QField F>
OneForm<F> g_hat_tensor(const OneForm<F>& zeta, const TensorOverA<F>& t, const Metric<F>& g) {
    OneForm<F> out(zeta.mode());
    for (int k = 0; k < 2; ++k) {
        OneForm<F> alpha = OneForm<F>::from_right(t.coefficient(k, 0), t.coefficient(k, 1));
        if (alpha.is_zero()) continue;
        out = out + left_mul(g.eval_pair(zeta, OneForm<F>::basis(k, zeta.mode())), alpha);
    }
    return out;
}

// The four basis residuals of the metric-compatibility condition
//   d g(zeta, rho) = g_check(nabla^L zeta, rho) + g_hat(zeta, nabla^R rho):
//   P^{ij} = d G_{ij} - theta^k g(theta^l Gamma^i_{kl}, theta^j)
//                     - g(theta^i, theta^k) theta^l Gammatilde^j_{kl}.
template <QField F>
struct CompatReport {
    std::array<std::array<OneForm<F>, 2>, 2> residual;
    bool satisfied = true;
};

template <QField F>
CompatReport<F> metric_compat_residuals(const Christoffel<F>& left, const Christoffel<F>& right,
                                        const Metric<F>& g) {
    CompatReport<F> report;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            OneForm<F> p = differential(g.entry(i, j)) -
                           g_check_tensor(gamma_tensor(left, i), OneForm<F>::basis(j), g) -
                           g_hat_tensor(OneForm<F>::basis(i), gamma_tensor(right, j), g);
            report.satisfied = report.satisfied && p.is_zero();
            report.residual[i][j] = std::move(p);
        }
    return report;
}

// Direct evaluation of the defining condition on a pair of 1-forms.
template <QField F>
OneForm<F> metric_compat_direct(const Christoffel<F>& left, const Christoffel<F>& right, const Metric<F>& g,
                                const OneForm<F>& zeta, const OneForm<F>& rho) {
    return differential(g.eval_pair(zeta, rho)) - g_check_tensor(nabla_left(left, zeta), rho, g) -
           g_hat_tensor(zeta, nabla_right(right, rho), g);
}

// Metric compatibility evaluated only over the centre of the bimodule
// (cube root of unity): both arguments run over the two generators of the
// centre over Z(A).
inline bool compat_over_center(const Christoffel<Zeta3>& left, const Christoffel<Zeta3>& right,
                               const Metric<Zeta3>& g) {
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            OneForm<Zeta3> zeta = central_form_generator(a);
            OneForm<Zeta3> rho = central_form_generator(b);
            if (!metric_compat_direct(left, right, g, zeta, rho).is_zero()) return false;
        }
    return true;
}

// The interpolation family of connection pairs:
//   f_L(t) = (1-t) nabla^L + t (sigma o nabla^R)
//   f_R(s) = s (sigma^{-1} o nabla^L) + (1-s) nabla^R
template <QField F>
struct InterpPair {
    F t, s;
    Christoffel<F> left;
    Christoffel<F> right;
    SigmaMap<F> braiding = SigmaMap<F>::standard();
    SigmaMap<F> braiding_inverse = SigmaMap<F>::standard_inverse();

    TensorOverA<F> eval_left(const OneForm<F>& zeta) const {
        return (F(1) - t) * nabla_left(left, zeta) + t * braiding.apply(nabla_right(right, zeta));
    }
    TensorOverA<F> eval_right(const OneForm<F>& zeta) const {
        return s * braiding_inverse.apply(nabla_left(left, zeta)) + (F(1) - s) * nabla_right(right, zeta);
    }
};

template <QField F>
InterpPair<F> interp_pair(const F& t, const F& s, const Christoffel<F>& left, const Christoffel<F>& right,
                          const SigmaMap<F>& braiding = SigmaMap<F>::standard(),
                          const SigmaMap<F>& braiding_inverse = SigmaMap<F>::standard_inverse()) {
    return InterpPair<F>{t, s, left, right, braiding, braiding_inverse};
}

} // namespace ncgeo
