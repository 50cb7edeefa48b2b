#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibcalc/errors.hpp"
#include "fibcalc/operators.hpp"
#include "fibcalc/sequence.hpp"
#include "support.hpp"

using namespace fibcalc;
using testsupport::random_delta;
using testsupport::random_polynomial;
using testsupport::random_rational;
using testsupport::random_series;

namespace {

const SequenceSpec kFib = SequenceSpec::fibonacci();

Polynomial x_pow(std::size_t n) { return Polynomial::monomial(Rational(1), n); }

std::vector<Rational> rats(std::initializer_list<Rational> cs) { return cs; }

}  // namespace

TEST_CASE("f-derivative action") {
    const DeltaOperator d = f_derivative(kFib, 6);
    CHECK(apply(d, x_pow(5)) == Polynomial::monomial(Rational(5), 4));
    CHECK(apply(d, Polynomial::constant(Rational(7))) == Polynomial());
    // x^3 + x -> F_3 x^2 + F_1 = 2x^2 + 1
    const Polynomial p = x_pow(3) + x_pow(1);
    CHECK(apply(d, p) == Polynomial({Rational(1), Rational(0), Rational(2)}));
}

TEST_CASE("apply refuses degree above the order") {
    const OperatorSeries id = OperatorSeries::identity(kFib, 3);
    CHECK(apply(id, x_pow(3)) == x_pow(3));
    CHECK_THROWS_AS(apply(id, x_pow(4)), TruncationError);
}

TEST_CASE("translation operator") {
    CHECK(translation(kFib, Rational(0), 4) == OperatorSeries::identity(kFib, 4));
    CHECK(translation(kFib, Rational(1), 2).coeffs() ==
          rats({Rational(1), Rational(1), Rational(1)}));
    // E^y x = x + y
    const Rational y(BigInt(3), BigInt(7));
    CHECK(f_shift_value(kFib, x_pow(1), y) == x_pow(1) + Polynomial::constant(y));
    // E^1 x^2 = x^2 + x + 1
    CHECK(f_shift_value(kFib, x_pow(2), Rational(1)) ==
          Polynomial({Rational(1), Rational(1), Rational(1)}));
    // Delta_F x^3 = E^1 x^3 - x^3 = 2x^2 + 2x + 1
    const DeltaOperator delta = forward_difference(kFib, 4);
    CHECK(apply(delta, x_pow(3)) == Polynomial({Rational(1), Rational(2), Rational(2)}));
}

TEST_CASE("multiplication") {
    std::mt19937_64 rng(7);
    const OperatorSeries t = random_series(rng, kFib, 8);
    CHECK(multiply(t, OperatorSeries::identity(kFib, 8)) == t);

    const OperatorSeries d = f_derivative(kFib, 4).series();
    OperatorSeries d2 = multiply(d, d);
    CHECK(d2.coeff(2) == Rational(1));
    CHECK(d2.coeff(1) == Rational(0));

    CHECK_THROWS_AS(multiply(t, OperatorSeries::identity(kFib, 5)), OrderMismatchError);
    const SequenceSpec other = SequenceSpec::custom(
        {BigInt(0), BigInt(1), BigInt(1), BigInt(2), BigInt(3), BigInt(5), BigInt(8),
         BigInt(13), BigInt(21)});
    CHECK_THROWS_AS(multiply(t, OperatorSeries::identity(other, 8)), OrderMismatchError);
}

TEST_CASE("divided-basis product is the fibonomial convolution") {
    // exp_F series: all divided coefficients 1; product c_k = sum_l binom(k,l)_F.
    const OperatorSeries e = translation(kFib, Rational(1), 6);
    const OperatorSeries prod = multiply(e, e);
    for (std::size_t k = 0; k <= 6; ++k) {
        Rational expected(0);
        for (std::size_t l = 0; l <= k; ++l) expected += Rational(fibonomial(kFib, k, l));
        CHECK(prod.divided_coeff(k) == expected);
    }
    CHECK(prod.divided_coeff(2) == Rational(3));
}

TEST_CASE("isomorphism: plain product equals divided-basis convolution") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const OperatorSeries t = random_series(rng, kFib, 12);
        const OperatorSeries s = random_series(rng, kFib, 12);
        const OperatorSeries prod = multiply(t, s);
        for (std::size_t k = 0; k <= 12; ++k) {
            Rational conv(0);
            for (std::size_t l = 0; l <= k; ++l) {
                conv += Rational(fibonomial(kFib, k, l)) * t.divided_coeff(l) *
                        s.divided_coeff(k - l);
            }
            CHECK(prod.divided_coeff(k) == conv);
        }
    }
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const OperatorSeries a = random_series(rng, kFib, 10);
        const OperatorSeries b = random_series(rng, kFib, 10);
        const OperatorSeries c = random_series(rng, kFib, 10);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("inversion") {
    const OperatorSeries id = OperatorSeries::identity(kFib, 8);
    CHECK(invert(id) == id);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const OperatorSeries t = random_series(rng, kFib, 8, /*invertible=*/true);
        CHECK(invert(invert(t)) == t);
        CHECK(multiply(t, invert(t)) == id);
    }

    // invert(I - D) is the geometric series, and D * that is the (signed)
    // Laguerre operator via L = D (D - I)^{-1}.
    const OperatorSeries d = f_derivative(kFib, 8).series();
    const OperatorSeries geometric = invert(id - d);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(geometric.coeff(k) == Rational(1));
    CHECK(multiply(d, invert(d - id)) == laguerre_op(kFib, 8).series());

    CHECK_THROWS_AS(invert(d), NotInvertibleError);
}

TEST_CASE("pincherle derivative") {
    const OperatorSeries d = f_derivative(kFib, 6).series();
    CHECK(pincherle(d) == OperatorSeries::identity(kFib, 5));
    for (int n = 2; n <= 5; ++n) {
        const OperatorSeries dn = power(d, n);
        const OperatorSeries expected = Rational(n) * power(d.truncated(5), n - 1);
        CHECK(pincherle(dn) == expected);
    }
    const OperatorSeries c = Rational(BigInt(5), BigInt(3)) * OperatorSeries::identity(kFib, 4);
    CHECK(pincherle(c) == OperatorSeries::zero(kFib, 3));
}

TEST_CASE("pincherle leibnitz and power rules") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const OperatorSeries t = random_series(rng, kFib, 10);
        const OperatorSeries s = random_series(rng, kFib, 10);
        const OperatorSeries lhs = pincherle(multiply(t, s));
        const OperatorSeries rhs = multiply(pincherle(t), s.truncated(9)) +
                                   multiply(t.truncated(9), pincherle(s));
        CHECK(lhs == rhs);
    }
    for (int n = 1; n <= 6; ++n) {
        const OperatorSeries s = random_series(rng, kFib, 10);
        const OperatorSeries lhs = pincherle(power(s, n));
        const OperatorSeries rhs =
            Rational(n) * multiply(pincherle(s), power(s.truncated(9), n - 1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("xhat operator and commutator") {
    CHECK(xhat_apply(kFib, Polynomial::constant(Rational(1))) == x_pow(1));
    CHECK(xhat_apply(kFib, x_pow(1)) == Polynomial::monomial(Rational(2), 2));

    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = random_polynomial(rng, 8);
        const Polynomial lhs = f_derivative_apply(kFib, xhat_apply(kFib, p)) -
                               xhat_apply(kFib, f_derivative_apply(kFib, p));
        CHECK(lhs == p);
        CHECK(xhat_inverse_apply(kFib, xhat_apply(kFib, p)) == p);
    }
    CHECK(xhat_inverse_apply(kFib, Polynomial::constant(Rational(4))) == Polynomial());
}

TEST_CASE("delta recognition") {
    CHECK(is_delta(f_derivative(kFib, 4).series()));
    CHECK_FALSE(is_delta(translation(kFib, Rational(1), 4)));
    CHECK(is_delta(forward_difference(kFib, 4).series()));
    CHECK(is_delta(backward_difference(kFib, 4).series()));
    CHECK(is_delta(abel_op(kFib, Rational(2), 4).series()));
    CHECK(is_delta(laguerre_op(kFib, 4).series()));
    CHECK_THROWS_AS(DeltaOperator(translation(kFib, Rational(1), 4)), NotDeltaError);
}

TEST_CASE("named operator coefficients") {
    const Rational half(BigInt(1), BigInt(2));
    CHECK(forward_difference(kFib, 3).series().coeffs() ==
          rats({Rational(0), Rational(1), Rational(1), half}));
    CHECK(backward_difference(kFib, 3).series().coeffs() ==
          rats({Rational(0), Rational(1), Rational(-1), half}));
    // A = D E^a: c_{k+1} = a^k / F_k!
    const OperatorSeries abel = abel_op(kFib, Rational(2), 3).series();
    CHECK(abel.coeffs() == rats({Rational(0), Rational(1), Rational(2), Rational(4)}));
    const OperatorSeries lag = laguerre_op(kFib, 3).series();
    CHECK(lag.coeffs() == rats({Rational(0), Rational(-1), Rational(-1), Rational(-1)}));
}

TEST_CASE("every delta operator reduces degree by one") {
    std::mt19937_64 rng(5544);
    for (int trial = 0; trial < 40; ++trial) {
        const DeltaOperator q = random_delta(rng, kFib, 10);
        Polynomial p = random_polynomial(rng, 9);
        if (p.is_zero()) continue;
        CHECK(apply(q, p).degree() == p.degree() - 1);
    }
}

TEST_CASE("delta operators factor as D times an invertible series") {
    for (const DeltaOperator& q :
         {forward_difference(kFib, 6), backward_difference(kFib, 6),
          abel_op(kFib, Rational(3), 6), laguerre_op(kFib, 6), f_derivative(kFib, 6)}) {
        std::vector<Rational> shifted(q.order(), Rational(0));
        for (std::size_t k = 1; k <= q.order(); ++k) shifted[k - 1] = q.series().coeff(k);
        const OperatorSeries p(kFib, std::move(shifted));
        CHECK_FALSE(p.coeff(0).is_zero());
        CHECK_NOTHROW(invert(p));
    }
}

TEST_CASE("shift invariance") {
    std::mt19937_64 rng(4321);
    for (int trial = 0; trial < 25; ++trial) {
        const OperatorSeries t = random_series(rng, kFib, 9);
        const Rational y = random_rational(rng);
        const Polynomial p = random_polynomial(rng, 8);
        const OperatorSeries ey = translation(kFib, y, 9);
        CHECK(apply(t, apply(ey, p)) == apply(ey, apply(t, p)));
    }
}

TEST_CASE("powers") {
    std::mt19937_64 rng(11);
    const OperatorSeries t = random_series(rng, kFib, 8, true);
    CHECK(power(t, 0) == OperatorSeries::identity(kFib, 8));
    CHECK(power(t, -1) == invert(t));
    const OperatorSeries d = f_derivative(kFib, 8).series();
    OperatorSeries d3 = power(d, 3);
    CHECK(d3.coeff(3) == Rational(1));
    CHECK(multiply(power(t, 2), t) == power(t, 3));
    CHECK(multiply(power(t, -2), power(t, 2)) == OperatorSeries::identity(kFib, 8));
    CHECK_THROWS_AS(power(d, -1), NotInvertibleError);
}

TEST_CASE("compositional inverse") {
    const OperatorSeries z = f_derivative(kFib, 6).series();
    CHECK(compositional_inverse(z) == z);

    const OperatorSeries delta = forward_difference(kFib, 6).series();
    const OperatorSeries r = compositional_inverse(delta);
    CHECK(compose_indicator(delta, r) == z);
    CHECK(compose_indicator(r, delta) == z);

    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        const DeltaOperator q = random_delta(rng, kFib, 8);
        const OperatorSeries inv = compositional_inverse(q.series());
        CHECK(inv.coeff(1) == Rational(1) / q.series().coeff(1));
        CHECK(compose_indicator(q.series(), inv) == f_derivative(kFib, 8).series());
    }

    CHECK_THROWS_AS(compositional_inverse(translation(kFib, Rational(1), 5)), NotDeltaError);
}

TEST_CASE("rendering in both bases") {
    const DeltaOperator delta = forward_difference(kFib, 3);
    CHECK(delta.series().str_plain() == "c: [0, 1, 1, 1/2]");
    CHECK(delta.series().str_divided() == "a: [0, 1, 1, 1]");
}
