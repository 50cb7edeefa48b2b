#pragma once

#include <cstddef>
#include <vector>

#include "fibcalc/rational.hpp"

namespace fibcalc::series {

// Truncated plain power-series arithmetic on coefficient vectors c_0..c_N.
// All functions return a vector of exactly order+1 entries.

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                          std::size_t order);

/// 1 / a, valid when a[0] != 0; triangular recursion.
std::vector<Rational> reciprocal(const std::vector<Rational>& a, std::size_t order);

/// outer(inner(z)), valid when inner has zero constant term.
std::vector<Rational> compose(const std::vector<Rational>& outer,
                              const std::vector<Rational>& inner, std::size_t order);

}  // namespace fibcalc::series
