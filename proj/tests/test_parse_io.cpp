#include <catch2/catch_amalgamated.hpp>

#include "ncgeo/samples.hpp"
#include "ncgeo/sections.hpp"

using namespace ncgeo;

TEST_CASE("expression parsing") {
    SECTION("basic expressions") {
        auto e = parse_alg<GenericQ>("x^2*y + 3/2*y - q^2*x");
        AlgElem<GenericQ> expected;
        expected.add_term(GenericQ(1), 2, 1);
        expected.add_term(GenericQ(QPoly(std::vector<Rational>{rational_of(3, 2)})), 0, 1);
        expected.add_term(-q_power<GenericQ>(2), 1, 0);
        REQUIRE(e == expected);
    }
    SECTION("parentheses and unary minus") {
        auto e = parse_alg<Zeta3>("-(x - y)*(x + y)");
        auto direct = -((AlgElem<Zeta3>::x() - AlgElem<Zeta3>::y()) * (AlgElem<Zeta3>::x() + AlgElem<Zeta3>::y()));
        REQUIRE(e == direct);
    }
    SECTION("negative exponents require laurent mode") {
        auto e = parse_alg<GenericQ>("x^-2*y^4", PowerMode::Laurent);
        REQUIRE(e == AlgElem<GenericQ>::monomial(GenericQ(1), -2, 4, PowerMode::Laurent));
        REQUIRE_THROWS_AS(parse_alg<GenericQ>("x^-2", PowerMode::Polynomial), ParseError);
    }
    SECTION("scalar division") {
        REQUIRE(parse_scalar<GenericQ>("(q^2 - 1)/(q - 1)") == GenericQ::q() + GenericQ(1));
        REQUIRE(parse_scalar<Zeta3>("1/(1 - q)") == Zeta3(1) / (Zeta3(1) - Zeta3::q()));
        REQUIRE_THROWS_AS(parse_scalar<GenericQ>("1/(x + y)"), ParseError);
    }
    SECTION("errors carry locations") {
        try {
            parse_alg<GenericQ>("x +\n* y");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 2);
            REQUIRE(e.column() == 1);
        }
        REQUIRE_THROWS_AS(parse_alg<GenericQ>("z + 1"), ParseError);
        REQUIRE_THROWS_AS(parse_alg<GenericQ>("x + "), ParseError);
        REQUIRE_THROWS_AS(parse_alg<GenericQ>("(x"), ParseError);
    }
}

TEST_CASE("printing and parsing are mutually inverse") {
    Rng rng(41);
    SECTION("generic q elements") {
        for (int t = 0; t < 40; ++t) {
            auto e = random_alg<GenericQ>(rng, ExpWindow{0, 5, 0, 5}, 3);
            REQUIRE(parse_alg<GenericQ>(e.to_string()) == e);
        }
    }
    SECTION("cyclotomic laurent elements") {
        for (int t = 0; t < 40; ++t) {
            auto e = random_alg<Zeta3>(rng, ExpWindow{-4, 4, -4, 4}, 3, PowerMode::Laurent);
            REQUIRE(parse_alg<Zeta3>(e.to_string(), PowerMode::Laurent) == e);
        }
    }
    SECTION("scalars") {
        for (int t = 0; t < 40; ++t) {
            GenericQ v = random_scalar<GenericQ>(rng);
            REQUIRE(parse_scalar<GenericQ>(v.to_string()) == v);
            Zeta3 z = random_scalar<Zeta3>(rng);
            REQUIRE(parse_scalar<Zeta3>(z.to_string()) == z);
        }
    }
}

TEST_CASE("section files") {
    const std::string text = R"(# a comment
[metric]
G11 = x^3*y  # trailing comment
G12 = q*x^2
G21 = x^2
G22 = 0

[gamma]
G^1_11 = x
G^1_12 = 0
G^1_21 = 0
G^1_22 = x^2
G^2_11 = y
G^2_12 = 0
G^2_21 = 0
G^2_22 = 0
)";
    SECTION("metric and christoffel round trip") {
        auto file = SectionFile::parse(text);
        auto g = load_metric<Zeta3>(file);
        REQUIRE(g.entry(0, 0) == AlgElem<Zeta3>::monomial(Zeta3(1), 3, 1));
        REQUIRE(g.entry(0, 1) == AlgElem<Zeta3>::monomial(Zeta3::q(), 2, 0));
        auto c = load_christoffel<Zeta3>(file, "gamma");
        REQUIRE(c.side == Side::Left);
        REQUIRE(c.entry(0, 1, 1) == AlgElem<Zeta3>::monomial(Zeta3(1), 2, 0));

        auto file2 = SectionFile::parse(write_metric(g) + write_christoffel(c, "gamma"));
        REQUIRE(load_metric<Zeta3>(file2) == g);
        REQUIRE(load_christoffel<Zeta3>(file2, "gamma") == c);
    }
    SECTION("random christoffel data survives a file round trip") {
        Rng rng(42);
        for (int t = 0; t < 10; ++t) {
            auto c = random_christoffel<Zeta3>(rng, ExpWindow{0, 4, 0, 4});
            auto file = SectionFile::parse(write_christoffel(c, "gammatilde"));
            auto back = load_christoffel<Zeta3>(file, "gammatilde");
            REQUIRE(back.side == Side::Right);
            REQUIRE(back.gamma == c.gamma);
        }
    }
    SECTION("gauge sections validate the inverse") {
        const std::string gauge = R"([gauge]
U11 = 1
U12 = x
U21 = 0
U22 = 1
Uinv11 = 1
Uinv12 = -x
Uinv21 = 0
Uinv22 = 1
)";
        auto g = load_gauge<Zeta3>(SectionFile::parse(gauge));
        REQUIRE(g.u[0][1] == AlgElem<Zeta3>::x());
        const std::string bad = R"([gauge]
U11 = 1
U12 = x
U21 = 0
U22 = 1
Uinv11 = 1
Uinv12 = x
Uinv21 = 0
Uinv22 = 1
)";
        REQUIRE_THROWS_AS(load_gauge<Zeta3>(SectionFile::parse(bad)), InverseInvalid);
    }
    SECTION("malformed files raise located errors") {
        REQUIRE_THROWS_AS(SectionFile::parse("G11 = 1\n"), ParseError);
        REQUIRE_THROWS_AS(SectionFile::parse("[metric\nG11 = 1\n"), ParseError);
        REQUIRE_THROWS_AS(SectionFile::parse("[metric]\nG11\n"), ParseError);
        auto file = SectionFile::parse("[metric]\nG11 = x +* 2\nG12 = 0\nG21 = 0\nG22 = 0\n");
        REQUIRE_THROWS_AS(load_metric<Zeta3>(file), ParseError);
    }
}
