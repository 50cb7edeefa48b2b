#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fibcalc/rational.hpp"

namespace fibcalc {

/// Base sequence of the calculus: the Fibonacci numbers or an explicit
/// user-supplied list a_0, a_1, ... (the generalized-cobweb case).
///
/// For use in the operator modules every term with index >= 1 must be
/// positive; a_0 = 0 is fine because factorials never multiply it in.
class SequenceSpec {
  public:
    enum class Kind { Fibonacci, Custom };

    SequenceSpec() : kind_(Kind::Fibonacci) {}
    static SequenceSpec fibonacci() { return SequenceSpec(); }
    static SequenceSpec custom(std::vector<BigInt> values);

    /// One non-negative integer per line, index starting at 0.
    static SequenceSpec from_file(const std::string& path);

    Kind kind() const { return kind_; }
    const std::vector<BigInt>& values() const { return values_; }

    friend bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
        return a.kind_ == b.kind_ && a.values_ == b.values_;
    }

  private:
    explicit SequenceSpec(std::vector<BigInt> values)
        : kind_(Kind::Custom), values_(std::move(values)) {}

    Kind kind_;
    std::vector<BigInt> values_;  // empty for Fibonacci
};

/// n-th term of the sequence. Throws std::out_of_range if a custom list is too short.
BigInt term(const SequenceSpec& spec, std::size_t n);

/// F_n! = F_n F_{n-1} ... F_1, with F_0! = 1. Throws DegenerateSequenceError
/// if any factor F_1..F_n is zero.
BigInt f_factorial(const SequenceSpec& spec, std::size_t n);

/// Falling product F_n F_{n-1} ... F_{n-k+1}; empty product for k = 0.
/// k > n is a domain error here (unlike fibonomial, which returns 0).
BigInt f_falling(const SequenceSpec& spec, std::size_t n, std::size_t k);

/// Fibonomial coefficient F_n! / (F_k! F_{n-k}!), computed as the
/// falling-factorial quotient. Returns 0 for k > n.
BigInt fibonomial(const SequenceSpec& spec, std::size_t n, std::size_t k);

}  // namespace fibcalc
