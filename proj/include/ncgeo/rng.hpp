#pragma once

#include <cstdint>
#include <random>

#include "ncgeo/algebra.hpp"
#include "ncgeo/scalar.hpp"

namespace ncgeo {

// Deterministic random source. mt19937_64 output is fully specified by the
// standard and range reduction is done by hand, so seeded runs are
// bit-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(unsigned percent) { return next() % 100 < percent; }

  private:
    std::mt19937_64 eng_;
};

inline Rational random_rational(Rng& rng) {
    long num = rng.range(-6, 6);
    long den = rng.range(1, 4);
    return rational_of(num, den);
}

template <class F>
F random_scalar(Rng& rng);

template <>
inline Rational random_scalar<Rational>(Rng& rng) {
    return random_rational(rng);
}

template <>
inline Zeta3 random_scalar<Zeta3>(Rng& rng) {
    return Zeta3(random_rational(rng), random_rational(rng));
}

template <>
inline Gaussian random_scalar<Gaussian>(Rng& rng) {
    return Gaussian(random_rational(rng), random_rational(rng));
}

template <>
inline GenericQ random_scalar<GenericQ>(Rng& rng) {
    std::vector<Rational> num(static_cast<size_t>(rng.range(1, 3)), Rational(0));
    for (auto& c : num) c = random_rational(rng);
    GenericQ v{QPoly(std::move(num))};
    if (rng.chance(30)) {
        // occasional q-power denominator keeps division paths exercised
        v = v / q_power<GenericQ>(rng.range(1, 2));
    }
    return v;
}

template <QField F>
F random_nonzero_scalar(Rng& rng) {
    for (;;) {
        F v = random_scalar<F>(rng);
        if (!(v == F(0))) return v;
    }
}

// Sparse random element supported in the window (roughly `terms` monomials).
template <QField F>
AlgElem<F> random_alg(Rng& rng, const ExpWindow& window, int terms, PowerMode mode = PowerMode::Polynomial) {
    AlgElem<F> out(mode);
    for (int k = 0; k < terms; ++k)
        out.add_term(random_scalar<F>(rng), rng.range(window.pmin, window.pmax), rng.range(window.rmin, window.rmax));
    return out;
}

// Random element of the centre at the cube root of unity: a combination of
// the monomials x^{3i} y^{3j}.
inline AlgElem<Zeta3> random_central_zeta3(Rng& rng, long imax = 1, long jmax = 1,
                                           PowerMode mode = PowerMode::Polynomial) {
    AlgElem<Zeta3> out(mode);
    int terms = static_cast<int>(rng.range(1, 2));
    for (int k = 0; k < terms; ++k)
        out.add_term(random_scalar<Zeta3>(rng), 3 * rng.range(0, imax), 3 * rng.range(0, jmax));
    return out;
}

} // namespace ncgeo
