#include <catch2/catch_amalgamated.hpp>

#include "ncgeo/matrixgeo.hpp"
#include "ncgeo/rng.hpp"

using namespace ncgeo;
using namespace ncgeo::matrixgeo;

namespace {

Mat2 random_mat(Rng& rng) {
    Mat2 m;
    for (int k = 0; k < 4; ++k)
        if (rng.chance(70)) m.a[k] = random_scalar<Gaussian>(rng);
    return m;
}

MatFunc random_func(Rng& rng, int deg = 2, int terms = 2) {
    MatFunc out;
    for (int t = 0; t < terms; ++t) out.add(static_cast<int>(rng.range(0, deg)), static_cast<int>(rng.range(0, deg)), random_mat(rng));
    return out;
}

MatFunc random_central_func(Rng& rng, int deg = 2) {
    MatFunc out;
    for (int t = 0; t < 2; ++t) {
        Gaussian s = random_scalar<Gaussian>(rng);
        out.add(static_cast<int>(rng.range(0, deg)), static_cast<int>(rng.range(0, deg)), s * Mat2::identity());
    }
    return out;
}

MetricGrid random_symmetric_grid(Rng& rng, bool central) {
    MetricGrid g{};
    for (int i = 0; i < kBasis; ++i)
        for (int j = i; j < kBasis; ++j) {
            MatFunc v = central ? random_central_func(rng) : random_func(rng);
            g[i][j] = v;
            g[j][i] = v;
        }
    return g;
}

MGChristoffel random_christoffel_mg(Rng& rng, bool central = false, unsigned density = 25) {
    MGChristoffel c{};
    for (int i = 0; i < kBasis; ++i)
        for (int j = 0; j < kBasis; ++j)
            for (int k = 0; k < kBasis; ++k)
                if (rng.chance(density)) c.gamma[i][j][k] = central ? random_central_func(rng) : random_func(rng, 1, 1);
    return c;
}

MGChristoffel swapped(const MGChristoffel& left) {
    MGChristoffel right{};
    for (int i = 0; i < kBasis; ++i)
        for (int j = 0; j < kBasis; ++j)
            for (int k = 0; k < kBasis; ++k) right.gamma[i][k][j] = left.gamma[i][j][k];
    return right;
}

MGOneForm random_form_mg(Rng& rng) {
    MGOneForm w;
    for (int i = 0; i < kBasis; ++i)
        if (rng.chance(60)) w.comp[i] = random_func(rng);
    return w;
}

} // namespace

TEST_CASE("pauli structure constants are gaussian rational") {
    Gaussian two_i = Gaussian(Rational(0), Rational(2));
    REQUIRE(commutator(Mat2::pauli(0), Mat2::pauli(1)) == two_i * Mat2::pauli(2));
    REQUIRE(commutator(Mat2::pauli(1), Mat2::pauli(2)) == two_i * Mat2::pauli(0));
    REQUIRE(commutator(Mat2::pauli(2), Mat2::pauli(0)) == two_i * Mat2::pauli(1));
}

TEST_CASE("matrix function differential") {
    SECTION("coordinates map to de Rham directions") {
        auto d = differential_mg(MatFunc::coordinate(0));
        REQUIRE(d.comp[0] == MatFunc::identity());
        for (int i = 1; i < kBasis; ++i) REQUIRE(d.comp[i].is_zero());
    }
    SECTION("constant matrices map to inner directions") {
        auto d = differential_mg(MatFunc::lambda(0));
        REQUIRE(d.comp[0].is_zero());
        REQUIRE(d.comp[1].is_zero());
        REQUIRE(d.comp[2].is_zero()); // [lambda_1, lambda_1] = 0
        REQUIRE(d.comp[3] == MatFunc::constant(commutator(Mat2::pauli(1), Mat2::pauli(0))));
        REQUIRE(d.comp[4] == MatFunc::constant(commutator(Mat2::pauli(2), Mat2::pauli(0))));
    }
    SECTION("central elements have purely de Rham differential") {
        Rng rng(31);
        for (int t = 0; t < 10; ++t) {
            auto a = random_central_func(rng);
            auto d = differential_mg(a);
            for (int b = 0; b < 3; ++b) REQUIRE(d.comp[kCoords + b].is_zero());
        }
    }
    SECTION("Leibniz rule") {
        Rng rng(32);
        for (int t = 0; t < 15; ++t) {
            auto a = random_func(rng);
            auto b = random_func(rng);
            auto lhs = differential_mg(a * b);
            auto rhs = differential_mg(a).right_mul(b) + differential_mg(b).left_mul(a);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("metric grid bijection") {
    Rng rng(33);
    SECTION("round trip and symmetry check") {
        for (int t = 0; t < 10; ++t) {
            auto grid = random_symmetric_grid(rng, false);
            MGMetric g(grid);
            REQUIRE(g.grid() == grid);
        }
        auto bad = random_symmetric_grid(rng, false);
        bad[0][1] = bad[0][1] + MatFunc::identity();
        REQUIRE_THROWS_AS(MGMetric(bad), NotSymmetric);
    }
    SECTION("middle linearity is centrality of the entries") {
        for (int t = 0; t < 10; ++t) {
            MGMetric central(random_symmetric_grid(rng, true));
            REQUIRE(central.is_middle_linear());
            REQUIRE(central.middle_linearity_by_residuals());
        }
        auto grid = random_symmetric_grid(rng, true);
        grid[0][0] = MatFunc::lambda(0);
        MGMetric g(grid);
        REQUIRE(!g.is_middle_linear());
        REQUIRE(!g.middle_linearity_by_residuals());
    }
    SECTION("evaluation is bilinear over the algebra") {
        for (int t = 0; t < 10; ++t) {
            MGMetric g(random_symmetric_grid(rng, false));
            auto zeta = random_form_mg(rng);
            auto rho = random_form_mg(rng);
            auto a = random_func(rng);
            auto b = random_func(rng);
            REQUIRE(g.eval(zeta.left_mul(a), rho.right_mul(b)) == a * g.eval(zeta, rho) * b);
        }
    }
}

TEST_CASE("index swap characterises compatibility on the centre") {
    Rng rng(34);
    SECTION("swapped pairs pass, including the direct residual evaluation") {
        for (int t = 0; t < 10; ++t) {
            auto left = random_christoffel_mg(rng);
            auto right = swapped(left);
            REQUIRE(sigma_compat_mg(left, right));
            std::array<MatFunc, kBasis> c{};
            for (int i = 0; i < kBasis; ++i)
                if (rng.chance(70)) c[i] = random_central_func(rng);
            auto residual = sigma_compat_direct_mg(left, right, c);
            for (int j = 0; j < kBasis; ++j)
                for (int k = 0; k < kBasis; ++k) REQUIRE(residual[j][k].is_zero());
        }
    }
    SECTION("perturbed pairs fail both routes") {
        auto left = random_christoffel_mg(rng);
        auto right = swapped(left);
        right.gamma[1][2][3] += MatFunc::identity();
        REQUIRE(!sigma_compat_mg(left, right));
        std::array<MatFunc, kBasis> c{};
        c[1] = MatFunc::identity();
        auto residual = sigma_compat_direct_mg(left, right, c);
        bool nonzero = false;
        for (int j = 0; j < kBasis; ++j)
            for (int k = 0; k < kBasis; ++k) nonzero = nonzero || !residual[j][k].is_zero();
        REQUIRE(nonzero);
    }
    SECTION("whole-bimodule compatibility additionally needs central symbols") {
        auto central = random_christoffel_mg(rng, true);
        REQUIRE(whole_bimodule_mg(central, swapped(central)));
        auto mixed = random_christoffel_mg(rng, true);
        mixed.gamma[0][0][0] = MatFunc::lambda(0) * MatFunc::coordinate(0);
        REQUIRE(sigma_compat_mg(mixed, swapped(mixed)));
        REQUIRE(!whole_bimodule_mg(mixed, swapped(mixed)));
    }
}

TEST_CASE("metric compatibility in matrix geometry") {
    Rng rng(35);
    SECTION("flat pair with constant metric") {
        MGChristoffel flat{};
        MetricGrid grid{};
        for (int i = 0; i < kBasis; ++i) grid[i][i] = MatFunc::identity();
        auto residual = metric_compat_mg(flat, flat, MGMetric(grid));
        for (int i = 0; i < kBasis; ++i)
            for (int j = 0; j < kBasis; ++j) REQUIRE(residual[i][j].is_zero());
    }
    SECTION("a coordinate entry leaves exactly its differential") {
        MGChristoffel flat{};
        MetricGrid grid{};
        for (int i = 0; i < kBasis; ++i) grid[i][i] = MatFunc::identity();
        grid[0][0] = MatFunc::coordinate(0);
        auto residual = metric_compat_mg(flat, flat, MGMetric(grid));
        REQUIRE(residual[0][0].comp[0] == MatFunc::identity());
        for (int k = 1; k < kBasis; ++k) REQUIRE(residual[0][0].comp[k].is_zero());
        REQUIRE(residual[1][1].is_zero());
    }
    SECTION("display residuals factor the first-principles evaluation") {
        for (int t = 0; t < 10; ++t) {
            auto left = random_christoffel_mg(rng);
            auto right = random_christoffel_mg(rng);
            MGMetric g(random_symmetric_grid(rng, false));
            auto grid = metric_compat_mg(left, right, g);
            auto zeta = random_form_mg(rng);
            auto rho = random_form_mg(rng);
            auto direct = metric_compat_direct_mg(left, right, g, zeta, rho);
            MGOneForm combined;
            for (int i = 0; i < kBasis; ++i)
                for (int j = 0; j < kBasis; ++j)
                    for (int k = 0; k < kBasis; ++k)
                        combined.comp[k] += zeta.comp[i] * grid[i][j].comp[k] * rho.comp[j];
            REQUIRE(direct == combined);
        }
    }
}
