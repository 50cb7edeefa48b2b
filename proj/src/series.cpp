#include "fibcalc/series.hpp"

#include <cassert>
#include <stdexcept>

namespace fibcalc::series {

namespace {
Rational at(const std::vector<Rational>& v, std::size_t i) {
    return i < v.size() ? v[i] : Rational(0);
}
}  // namespace

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                          std::size_t order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Rational> reciprocal(const std::vector<Rational>& a, std::size_t order) {
    if (a.empty() || a[0].is_zero()) {
        throw std::domain_error("series reciprocal needs a nonzero constant term");
    }
    std::vector<Rational> out(order + 1, Rational(0));
    out[0] = Rational(1) / a[0];
    for (std::size_t n = 1; n <= order; ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k) {
            acc += at(a, k) * out[n - k];
        }
        out[n] = -acc / a[0];
    }
    return out;
}

std::vector<Rational> compose(const std::vector<Rational>& outer,
                              const std::vector<Rational>& inner, std::size_t order) {
    if (!inner.empty() && !inner[0].is_zero()) {
        throw std::domain_error("series composition needs inner constant term zero");
    }
    std::vector<Rational> out(order + 1, Rational(0));
    out[0] = at(outer, 0);
    // inner^k starts at z^k, so only k <= order contributes.
    std::vector<Rational> inner_pow(order + 1, Rational(0));
    inner_pow[0] = Rational(1);
    for (std::size_t k = 1; k <= order && k < outer.size(); ++k) {
        inner_pow = mul(inner_pow, inner, order);
        if (outer[k].is_zero()) continue;
        for (std::size_t j = k; j <= order; ++j) {
            out[j] += outer[k] * inner_pow[j];
        }
    }
    return out;
}

}  // namespace fibcalc::series
