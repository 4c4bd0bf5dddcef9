#pragma once

#include "ncgeo/connection.hpp"
#include "ncgeo/metric.hpp"
#include "ncgeo/rng.hpp"

namespace ncgeo {

// Seeded generators for the randomized suites.

template <QField F>
Metric<F> random_metric(Rng& rng, const ExpWindow& w, int terms = 2, PowerMode mode = PowerMode::Polynomial) {
    Metric<F> g(mode);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g.entry(i, j) = random_alg<F>(rng, w, terms, mode);
    return g;
}

template <QField F>
Christoffel<F> random_christoffel(Rng& rng, const ExpWindow& w, Side side = Side::Left, int terms = 2) {
    Christoffel<F> c(side);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) c.entry(i, j, k) = random_alg<F>(rng, w, terms);
    return c;
}

template <QField F>
OneForm<F> random_oneform(Rng& rng, const ExpWindow& w, int terms = 2, PowerMode mode = PowerMode::Polynomial) {
    return OneForm<F>::from_right(random_alg<F>(rng, w, terms, mode), random_alg<F>(rng, w, terms, mode));
}

// terms of a with x-exponent exactly p0
inline AlgElem<Zeta3> x_degree_part(const AlgElem<Zeta3>& a, long p0) {
    AlgElem<Zeta3> out(a.mode());
    for (const auto& [e, c] : a.terms())
        if (e.first == p0) out.add_term(c, e.first, e.second);
    return out;
}

// Random left Christoffel satisfying the divisibility conditions: the free
// entries are sampled, the x-degree-zero part of Gamma^2_21 is then fixed so
// the combined condition lands in xA.
inline Christoffel<Zeta3> random_admissible_christoffel(Rng& rng, long degree) {
    using A = AlgElem<Zeta3>;
    const Zeta3 q = Zeta3::q();
    ExpWindow full{0, degree, 0, degree};
    ExpWindow in_x{1, degree, 0, degree};
    ExpWindow in_x2{2, degree, 0, degree};
    Christoffel<Zeta3> c(Side::Left);
    c.entry(0, 0, 0) = random_alg<Zeta3>(rng, full, 2);
    c.entry(1, 0, 0) = random_alg<Zeta3>(rng, full, 2);
    c.entry(0, 0, 1) = random_alg<Zeta3>(rng, in_x, 2);
    c.entry(0, 1, 0) = random_alg<Zeta3>(rng, in_x, 2);
    c.entry(0, 1, 1) = random_alg<Zeta3>(rng, in_x2, 2);
    c.entry(1, 1, 1) = random_alg<Zeta3>(rng, in_x, 2);
    c.entry(1, 0, 1) = random_alg<Zeta3>(rng, full, 2);
    c.entry(1, 1, 0) = random_alg<Zeta3>(rng, in_x, 2);
    // fix the x^0 part of Gamma^2_21:
    // (q-1) G212|0 + (1-q^2) G221|0 + 3 q^2 (y x^{-1} G222)|0 = 0
    const PowerMode L = PowerMode::Laurent;
    A tail = (Zeta3(3) * q * q) * (A::y(L) * A::monomial(Zeta3(1), -1, 0, L) * c.entry(1, 1, 1).as_laurent());
    A t0 = x_degree_part((q - Zeta3(1)) * c.entry(1, 0, 1).as_laurent() + tail, 0);
    Zeta3 scale = Zeta3(-1) / (Zeta3(1) - q * q);
    c.entry(1, 1, 0) += (scale * t0).as_polynomial();
    return c;
}

// Break exactly one of the five nontrivial admissibility clauses.
inline Christoffel<Zeta3> random_inadmissible_christoffel(Rng& rng, long degree, int clause) {
    Christoffel<Zeta3> c = random_admissible_christoffel(rng, degree);
    AlgElem<Zeta3> ybump = AlgElem<Zeta3>::monomial(random_nonzero_scalar<Zeta3>(rng), 0, rng.range(0, degree));
    switch (clause % 5) {
        case 0: c.entry(0, 0, 1) += ybump; break;                                      // Gamma^1_12 leaves xA
        case 1: c.entry(0, 1, 0) += ybump; break;                                      // Gamma^1_21 leaves xA
        case 2: {
            AlgElem<Zeta3> xbump = AlgElem<Zeta3>::monomial(random_nonzero_scalar<Zeta3>(rng), 1, rng.range(0, degree));
            c.entry(0, 1, 1) += xbump;                                                 // Gamma^1_22 leaves x^2 A
            break;
        }
        case 3: c.entry(1, 1, 1) += ybump; break;                                      // Gamma^2_22 leaves xA
        case 4: c.entry(1, 1, 0) += ybump; break;                                      // combined condition fails
    }
    return c;
}

using CentralParams = std::array<std::array<std::array<AlgElem<Zeta3>, 2>, 2>, 2>;

inline CentralParams random_central_params(Rng& rng, long imax = 1, long jmax = 1) {
    CentralParams f{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                f[i][j][k] = rng.chance(60) ? random_central_zeta3(rng, imax, jmax) : AlgElem<Zeta3>::zero();
    return f;
}

// A nontrivial bimodule automorphism at the cube root of unity:
// id + mu n with n(eta) = xi z, n(xi) = 0 and central-compatible monomial z.
// n^2 = 0, so the inverse is id - mu n.
inline BimoduleMap<Zeta3> nilpotent_bimodule_automorphism(const Zeta3& mu, long s = 2, long t = 2) {
    using A = AlgElem<Zeta3>;
    A z = A::monomial(mu, s, t);
    std::array<std::array<A, 2>, 2> m{{{A::unit(), A::zero()}, {z, A::unit()}}};
    std::array<std::array<A, 2>, 2> mi{{{A::unit(), A::zero()}, {-z, A::unit()}}};
    return BimoduleMap<Zeta3>(std::move(m), std::move(mi));
}

} // namespace ncgeo
