#pragma once

#include <random>
#include <vector>

#include "fibcalc/operators.hpp"
#include "fibcalc/polynomial.hpp"

namespace testsupport {

using namespace fibcalc;

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int d = deg(rng);
    std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
    for (Rational& c : cs) c = random_rational(rng);
    return Polynomial(std::move(cs));
}

inline OperatorSeries random_series(std::mt19937_64& rng, const SequenceSpec& spec,
                                    std::size_t order, bool invertible = false) {
    std::vector<Rational> cs(order + 1);
    for (Rational& c : cs) c = random_rational(rng);
    if (invertible) {
        while (cs[0].is_zero()) cs[0] = random_rational(rng);
    }
    return OperatorSeries(spec, std::move(cs));
}

inline DeltaOperator random_delta(std::mt19937_64& rng, const SequenceSpec& spec,
                                  std::size_t order) {
    std::vector<Rational> cs(order + 1);
    for (Rational& c : cs) c = random_rational(rng);
    cs[0] = Rational(0);
    while (cs[1].is_zero()) cs[1] = random_rational(rng);
    return DeltaOperator(OperatorSeries(spec, std::move(cs)));
}

}  // namespace testsupport
