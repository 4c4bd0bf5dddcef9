#include <catch2/catch_amalgamated.hpp>

#include "ncgeo/linalg.hpp"
#include "ncgeo/rng.hpp"
#include "ncgeo/scalar.hpp"

using namespace ncgeo;

namespace {

template <class F>
ExactMatrix<F> random_matrix(Rng& rng, size_t rows, size_t cols) {
    ExactMatrix<F> m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (rng.chance(60)) m.at(i, j) = random_scalar<F>(rng);
    return m;
}

template <class F>
std::vector<F> mat_apply(const ExactMatrix<F>& m, const std::vector<F>& v) {
    std::vector<F> out(m.rows(), F(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

template <class F>
bool all_zero(const std::vector<F>& v) {
    for (const F& e : v)
        if (!(e == F(0))) return false;
    return true;
}

} // namespace

TEST_CASE("nullspace basics") {
    ExactMatrix<Rational> id(3, 3);
    for (size_t i = 0; i < 3; ++i) id.at(i, i) = 1;
    REQUIRE(nullspace(id).empty());

    ExactMatrix<Rational> m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    REQUIRE(basis[0] == std::vector<Rational>{Rational(1), Rational(1)});
}

TEST_CASE("rank-nullity and exactness on random matrices") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = random_matrix<Rational>(rng, 6, 4);
        auto basis = nullspace(m);
        REQUIRE(rank(m) + basis.size() == 4);
        for (const auto& v : basis) REQUIRE(all_zero(mat_apply(m, v)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix<GenericQ>(rng, 5, 5);
        auto basis = nullspace(m);
        REQUIRE(rank(m) + basis.size() == 5);
        for (const auto& v : basis) REQUIRE(all_zero(mat_apply(m, v)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix<Zeta3>(rng, 4, 6);
        auto basis = nullspace(m);
        REQUIRE(rank(m) + basis.size() == 6);
        for (const auto& v : basis) REQUIRE(all_zero(mat_apply(m, v)));
    }
}

TEST_CASE("nullspace output is deterministic") {
    Rng rng1(7), rng2(7);
    auto m1 = random_matrix<Zeta3>(rng1, 5, 7);
    auto m2 = random_matrix<Zeta3>(rng2, 5, 7);
    REQUIRE(nullspace(m1) == nullspace(m2));
}

TEST_CASE("solve reports feasibility exactly") {
    Rng rng(55);
    for (int trial = 0; trial < 15; ++trial) {
        auto m = random_matrix<Zeta3>(rng, 5, 4);
        // consistent system: b = M x0
        std::vector<Zeta3> x0(4);
        for (auto& e : x0) e = random_scalar<Zeta3>(rng);
        auto b = mat_apply(m, x0);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        REQUIRE(mat_apply(m, *sol) == b);
    }
    // inconsistent: 0 = 1
    ExactMatrix<Rational> m(2, 1);
    m.at(0, 0) = 1;
    std::vector<Rational> b{Rational(0), Rational(1)};
    REQUIRE(!solve(m, b).has_value());
}

TEST_CASE("span membership") {
    std::vector<std::vector<Rational>> basis = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    REQUIRE(in_span(basis, {Rational(3), Rational(-2)}));
    std::vector<std::vector<Rational>> partial = {{Rational(1), Rational(1)}};
    REQUIRE(in_span(partial, {Rational(2), Rational(2)}));
    REQUIRE(!in_span(partial, {Rational(1), Rational(0)}));
    std::vector<std::vector<Rational>> empty;
    REQUIRE(in_span(empty, {Rational(0), Rational(0)}));
    REQUIRE(!in_span(empty, {Rational(1), Rational(0)}));
}
