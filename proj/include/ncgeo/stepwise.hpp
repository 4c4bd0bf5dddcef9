#pragma once

#include "ncgeo/forms.hpp"

namespace ncgeo {

// Reference path for cross-validation: normal ordering by repeated
// single-generator steps of the defining relations
//   x xi = q^2 xi x      x eta = q eta x + (q^2-1) xi y
//   y xi = q xi y        y eta = q^2 eta y
// and their inverses. Nothing in the closed-form engine calls into this
// header; the engine and this rewriter are compared term by term in the
// verification suites.

// x^p y^r theta^i in right normal form, one generator move at a time.
template <QField F>
OneForm<F> stepwise_monomial_form(long p, long r, int basis, PowerMode mode = PowerMode::Laurent) {
    const F q2m1 = q_power<F>(2) - F(1);
    if (r > 0) {
        // peel one y from the right of the coefficient block
        F s = basis == 0 ? q_power<F>(1) : q_power<F>(2);
        return (s * stepwise_monomial_form<F>(p, r - 1, basis, mode)).right_mul(AlgElem<F>::y(mode));
    }
    if (r < 0) {
        F s = basis == 0 ? q_power<F>(-1) : q_power<F>(-2);
        return (s * stepwise_monomial_form<F>(p, r + 1, basis, mode)).right_mul(AlgElem<F>::monomial(F(1), 0, -1, mode));
    }
    if (p > 0) {
        if (basis == 0)
            return (q_power<F>(2) * stepwise_monomial_form<F>(p - 1, 0, 0, mode)).right_mul(AlgElem<F>::x(mode));
        OneForm<F> head = stepwise_monomial_form<F>(p - 1, 0, 1, mode);
        OneForm<F> mixed = stepwise_monomial_form<F>(p - 1, 0, 0, mode);
        return (q_power<F>(1) * head).right_mul(AlgElem<F>::x(mode)) +
               (q2m1 * mixed).right_mul(AlgElem<F>::y(mode));
    }
    if (p < 0) {
        if (basis == 0)
            return (q_power<F>(-2) * stepwise_monomial_form<F>(p + 1, 0, 0, mode))
                .right_mul(AlgElem<F>::monomial(F(1), -1, 0, mode));
        // x^{-1} eta = q^{-1} eta x^{-1} - q^{-2}(q^2-1) xi x^{-2} y
        OneForm<F> head = stepwise_monomial_form<F>(p + 1, 0, 1, mode);
        OneForm<F> mixed = stepwise_monomial_form<F>(p + 1, 0, 0, mode);
        return (q_power<F>(-1) * head).right_mul(AlgElem<F>::monomial(F(1), -1, 0, mode)) -
               (q_power<F>(-2) * q2m1 * mixed).right_mul(AlgElem<F>::monomial(F(1), -2, 1, mode));
    }
    return OneForm<F>::basis(basis, mode);
}

template <QField F>
OneForm<F> stepwise_left_mul(const AlgElem<F>& a, const OneForm<F>& omega) {
    const PowerMode mode = omega.mode();
    OneForm<F> out(mode);
    for (const auto& [e, c] : a.terms())
        for (int i = 0; i < 2; ++i) {
            if (omega.coefficient(i).is_zero()) continue;
            out = out + (c * stepwise_monomial_form<F>(e.first, e.second, i, mode)).right_mul(omega.coefficient(i));
        }
    return out;
}

// x^p y^r (theta^i (x) theta^j): rewrite the first leg, move what lands
// right of it across the tensor, rewrite again.
template <QField F>
TensorOverA<F> stepwise_monomial_tensor(long p, long r, int i, int j, PowerMode mode = PowerMode::Laurent) {
    TensorOverA<F> out(mode);
    OneForm<F> first = stepwise_monomial_form<F>(p, r, i, mode);
    for (int k = 0; k < 2; ++k) {
        const AlgElem<F>& carried = first.coefficient(k);
        if (carried.is_zero()) continue;
        OneForm<F> second = stepwise_left_mul(carried, OneForm<F>::basis(j, mode));
        for (int l = 0; l < 2; ++l) out.coefficient(k, l) += second.coefficient(l);
    }
    return out;
}

template <QField F>
TensorOverA<F> stepwise_left_mul_tensor(const AlgElem<F>& a, const TensorOverA<F>& t) {
    const PowerMode mode = t.mode();
    TensorOverA<F> out(mode);
    for (const auto& [e, c] : a.terms())
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                if (t.coefficient(i, j).is_zero()) continue;
                out = out + (c * stepwise_monomial_tensor<F>(e.first, e.second, i, j, mode))
                                .right_mul(t.coefficient(i, j));
            }
    return out;
}

} // namespace ncgeo
