#include "fibcalc/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fibcalc {

namespace {
const Rational kZero{};
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    p.coeffs_.push_back(std::move(c));
    p.strip();
    return p;
}

Polynomial Polynomial::monomial(Rational c, std::size_t n) {
    if (c.is_zero()) return Polynomial();
    Polynomial p;
    p.coeffs_.assign(n + 1, kZero);
    p.coeffs_[n] = std::move(c);
    return p;
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

const Rational& Polynomial::coeff(std::size_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    strip();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    strip();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return Polynomial();
    Polynomial r = p;
    for (Rational& c : r.coeffs_) c *= s;
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        const bool negative = c < Rational(0);
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const Rational mag = negative ? -c : c;
        if (d == 0) {
            out << mag.str();
        } else {
            if (mag != Rational(1)) out << mag.str() << "*";
            out << (d == 1 ? "x" : "x^" + std::to_string(d));
        }
    }
    return out.str();
}

std::vector<std::tuple<int, std::string, std::string>> Polynomial::triples() const {
    std::vector<std::tuple<int, std::string, std::string>> out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        out.emplace_back(d, c.num().get_str(), c.den().get_str());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace fibcalc
