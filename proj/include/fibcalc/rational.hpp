#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace fibcalc {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}  // NOLINT: implicit on purpose, scalars appear everywhere
    Rational(long n) : value_(static_cast<long>(n)) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or an integer literal, e.g. "225/2", "-16", "1/2".
    static Rational parse(const std::string& text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

  private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fibcalc
