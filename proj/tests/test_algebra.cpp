#include <catch2/catch_amalgamated.hpp>

#include "ncgeo/algebra.hpp"
#include "ncgeo/rng.hpp"

using namespace ncgeo;

namespace {
template <QField F>
AlgElem<F> mono(long p, long r, PowerMode mode = PowerMode::Polynomial) {
    return AlgElem<F>::monomial(F(1), p, r, mode);
}
} // namespace

TEST_CASE("normal-ordered products") {
    using A = AlgElem<GenericQ>;
    A x = A::x(), y = A::y();

    SECTION("y x = q^{-1} x y") {
        REQUIRE(y * x == q_power<GenericQ>(-1) * (x * y));
    }
    SECTION("x y is already ordered") {
        REQUIRE(x * y == mono<GenericQ>(1, 1));
    }
    SECTION("(x^2 y)(x y) = q^{-1} x^3 y^2") {
        REQUIRE(mono<GenericQ>(2, 1) * mono<GenericQ>(1, 1) == q_power<GenericQ>(-1) * mono<GenericQ>(3, 2));
    }
    SECTION("laurent: y x^{-1} = q x^{-1} y") {
        A yl = A::y(PowerMode::Laurent);
        A xinv = mono<GenericQ>(-1, 0, PowerMode::Laurent);
        REQUIRE(yl * xinv == q_power<GenericQ>(1) * (xinv * yl));
    }
}

TEST_CASE("product degree guards") {
    using A = AlgElem<GenericQ>;
    REQUIRE_THROWS_AS(A::monomial(GenericQ(1), -1, 0), NegativeExponent);
    REQUIRE_THROWS_AS(A::x() * A::x(PowerMode::Laurent), ModeMismatch);
    REQUIRE_NOTHROW(mono<GenericQ>(-2, 5, PowerMode::Laurent));
    REQUIRE_THROWS_AS(mono<GenericQ>(-2, 5, PowerMode::Laurent).as_polynomial(), NegativeExponent);
}

TEST_CASE("associativity and unit on random triples") {
    Rng rng(31);
    ExpWindow w{0, 4, 0, 4};
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_alg<GenericQ>(rng, w, 2);
        auto b = random_alg<GenericQ>(rng, w, 2);
        auto c = random_alg<GenericQ>(rng, w, 2);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * AlgElem<GenericQ>::unit() == a);
        REQUIRE(AlgElem<GenericQ>::unit() * a == a);
    }
    ExpWindow wl{-3, 3, -3, 3};
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_alg<Zeta3>(rng, wl, 2, PowerMode::Laurent);
        auto b = random_alg<Zeta3>(rng, wl, 2, PowerMode::Laurent);
        auto c = random_alg<Zeta3>(rng, wl, 2, PowerMode::Laurent);
        REQUIRE((a * b) * c == a * (b * c));
    }
}

TEST_CASE("centrality") {
    SECTION("x^3 is central at the cube root of unity") {
        REQUIRE(mono<Zeta3>(3, 0).is_central());
        REQUIRE(mono<Zeta3>(0, 3).is_central());
        REQUIRE(mono<Zeta3>(3, 3).is_central());
        REQUIRE(!mono<Zeta3>(1, 0).is_central());
    }
    SECTION("unit is central in any mode") {
        REQUIRE(AlgElem<GenericQ>::unit().is_central());
        REQUIRE(AlgElem<Zeta3>::unit().is_central());
    }
    SECTION("x is not central for generic q") {
        REQUIRE(!AlgElem<GenericQ>::x().is_central());
        AlgElem<GenericQ> x = AlgElem<GenericQ>::x(), y = AlgElem<GenericQ>::y();
        REQUIRE(x * y - y * x != AlgElem<GenericQ>::zero());
    }
    SECTION("central elements commute with everything") {
        Rng rng(77);
        ExpWindow w{0, 5, 0, 5};
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_central_zeta3(rng);
            auto b = random_alg<Zeta3>(rng, w, 3);
            REQUIRE(a * b == b * a);
        }
    }
}

TEST_CASE("left ideal membership") {
    using A = AlgElem<Zeta3>;
    REQUIRE(mono<Zeta3>(2, 1).in_left_ideal_x(1));
    A one_plus_xy = A::unit() + mono<Zeta3>(1, 1);
    REQUIRE(!one_plus_xy.in_left_ideal_x(1));
    A e = mono<Zeta3>(2, 1) + mono<Zeta3>(3, 0);
    REQUIRE(e.in_left_ideal_x(2));
    REQUIRE(!e.in_left_ideal_x(3));
}

TEST_CASE("center basis per mode") {
    SECTION("generic q: only scalars commute") {
        auto basis = center_basis<GenericQ>(6);
        REQUIRE(basis.size() == 1);
        REQUIRE(basis[0] == AlgElem<GenericQ>::unit());
    }
    SECTION("cube root of unity: monomials with both exponents divisible by three") {
        auto basis = center_basis<Zeta3>(3);
        REQUIRE(basis.size() == 4);
        for (const auto& e : basis) REQUIRE(e.is_central());
        std::vector<AlgElem<Zeta3>> expected = {mono<Zeta3>(0, 0), mono<Zeta3>(0, 3), mono<Zeta3>(3, 0),
                                                mono<Zeta3>(3, 3)};
        for (const auto& m : expected)
            REQUIRE(std::find(basis.begin(), basis.end(), m) != basis.end());

        auto small = center_basis<Zeta3>(2);
        REQUIRE(small.size() == 1);
        REQUIRE(small[0] == AlgElem<Zeta3>::unit());
    }
    SECTION("dimension counts monomials x^{3i} y^{3j} within the bound") {
        for (long bound : {3L, 5L, 6L, 7L}) {
            auto basis = center_basis<Zeta3>(bound);
            size_t expected = static_cast<size_t>((bound / 3 + 1) * (bound / 3 + 1));
            REQUIRE(basis.size() == expected);
        }
    }
}

TEST_CASE("integer powers including monomial inverses") {
    using A = AlgElem<GenericQ>;
    A xy = A::x() * A::y();
    REQUIRE(xy.pow(0) == A::unit());
    REQUIRE(xy.pow(3) == xy * xy * xy);
    A m = A::monomial(GenericQ(2), 1, 2, PowerMode::Laurent);
    REQUIRE(m.pow(-1) * m == A::unit(PowerMode::Laurent));
    REQUIRE(m * m.pow(-1) == A::unit(PowerMode::Laurent));
    REQUIRE_THROWS_AS((A::x(PowerMode::Laurent) + A::y(PowerMode::Laurent)).pow(-1), NegativeExponent);
}
