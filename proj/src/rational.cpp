#include "fibcalc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fibcalc {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (text.empty() || v.set_str(text, 10) != 0) {
        throw std::invalid_argument("unparsable rational: '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw std::invalid_argument("unparsable rational (zero denominator): '" + text + "'");
    }
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.value_ = -r.value_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division of rational by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fibcalc
