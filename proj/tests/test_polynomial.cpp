#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibcalc/polynomial.hpp"
#include "support.hpp"

using namespace fibcalc;
using testsupport::random_polynomial;
using testsupport::random_rational;

namespace {
Polynomial x_pow(std::size_t n) { return Polynomial::monomial(Rational(1), n); }
}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(1), BigInt(-2)).den() > 0);
    CHECK(Rational(BigInt(1), BigInt(-2)).str() == "-1/2");
    CHECK(Rational::parse("225/2").str() == "225/2");
    CHECK(Rational::parse("-16").str() == "-16");
    CHECK(Rational::parse("4/2").str() == "2");
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("canonical form strips trailing zeros") {
    const Polynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
    CHECK(Polynomial({Rational(0)}).is_zero());
    CHECK(Polynomial::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("addition examples") {
    CHECK(x_pow(1) + (-x_pow(1)) == Polynomial());
    CHECK((x_pow(2) - x_pow(1)) + x_pow(1) == x_pow(2));
    const Polynomial lhs = x_pow(3) + Polynomial::monomial(Rational(2), 1);
    const Polynomial rhs = x_pow(2) + Polynomial::constant(Rational(1));
    const Polynomial sum({Rational(1), Rational(2), Rational(1), Rational(1)});
    CHECK(lhs + rhs == sum);
}

TEST_CASE("multiplication examples") {
    std::mt19937_64 rng(1);
    const Polynomial p = random_polynomial(rng, 5);
    CHECK(p * Polynomial::constant(Rational(1)) == p);
    const Polynomial diff = x_pow(1) - Polynomial::constant(Rational(1));
    const Polynomial sum = x_pow(1) + Polynomial::constant(Rational(1));
    CHECK(diff * sum == x_pow(2) - Polynomial::constant(Rational(1)));
    CHECK(Polynomial() * p == Polynomial());
}

TEST_CASE("evaluation examples") {
    const Polynomial p = x_pow(2) - x_pow(1);
    CHECK(p.eval(Rational(0)) == Rational(0));
    CHECK(p.eval(Rational(1)) == Rational(0));
    const Polynomial q({Rational(0), Rational(3), Rational(-4), Rational(1)});
    CHECK(q.eval(Rational(2)) == Rational(-2));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 60; ++i) {
        const Polynomial a = random_polynomial(rng, 8);
        const Polynomial b = random_polynomial(rng, 8);
        const Polynomial c = random_polynomial(rng, 8);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(999);
    for (int i = 0; i < 60; ++i) {
        const Polynomial a = random_polynomial(rng, 8);
        const Polynomial b = random_polynomial(rng, 8);
        const Rational x = random_rational(rng);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("textual rendering") {
    const Polynomial table({Rational(0), Rational(3), Rational(-4), Rational(1)});
    CHECK(table.str() == "x^3 - 4*x^2 + 3*x");
    const Polynomial bern({Rational(BigInt(1), BigInt(2)), Rational(1), Rational(1)});
    CHECK(bern.str() == "x^2 + x + 1/2");
    CHECK(Polynomial().str() == "0");
    CHECK((-x_pow(1)).str() == "-x");
    CHECK(Polynomial::monomial(Rational(BigInt(225), BigInt(2)), 3).str() == "225/2*x^3");
    CHECK(Polynomial::constant(Rational(-7)).str() == "-7");
    CHECK((x_pow(4) - Polynomial::monomial(Rational(9), 3)).str() == "x^4 - 9*x^3");
}

TEST_CASE("structured triples") {
    const Polynomial p({Rational(BigInt(1), BigInt(2)), Rational(0), Rational(-3)});
    const auto t = p.triples();
    REQUIRE(t.size() == 2);
    CHECK(t[0] == std::tuple<int, std::string, std::string>{2, "-3", "1"});
    CHECK(t[1] == std::tuple<int, std::string, std::string>{0, "1", "2"});
}
