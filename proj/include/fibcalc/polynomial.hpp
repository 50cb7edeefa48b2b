#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "fibcalc/rational.hpp"

namespace fibcalc {

/// Dense univariate polynomial over Rational, coefficient index = degree.
/// Canonical form: no trailing zeros, so structural equality is mathematical
/// equality. The zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
  public:
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    /// c * x^n
    static Polynomial monomial(Rational c, std::size_t n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero beyond the stored degree.
    const Rational& coeff(std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    /// Descending-degree rendering, e.g. "x^3 - 4*x^2 + 3*x" or "x^2 + x + 1/2".
    std::string str() const;

    /// Machine-readable rendering: [degree, numerator, denominator] triples,
    /// descending degree, zero coefficients omitted.
    std::vector<std::tuple<int, std::string, std::string>> triples() const;

  private:
    void strip();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace fibcalc
