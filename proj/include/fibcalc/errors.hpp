#pragma once

#include <stdexcept>
#include <string>

namespace fibcalc {

// A sequence term that must be positive (a_n for n >= 1) turned out to be zero.
class DegenerateSequenceError : public std::domain_error {
  public:
    explicit DegenerateSequenceError(const std::string& what) : std::domain_error(what) {}
};

// A polynomial of degree > N was handed to an order-N series.
class TruncationError : public std::invalid_argument {
  public:
    explicit TruncationError(const std::string& what) : std::invalid_argument(what) {}
};

// Two series with different truncation orders or different base sequences were combined.
class OrderMismatchError : public std::invalid_argument {
  public:
    explicit OrderMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Inversion of a series with zero constant term (T1 = 0).
class NotInvertibleError : public std::domain_error {
  public:
    explicit NotInvertibleError(const std::string& what) : std::domain_error(what) {}
};

// A series that is not a delta operator (c_0 != 0 or c_1 = 0) where one is required.
class NotDeltaError : public std::invalid_argument {
  public:
    explicit NotDeltaError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace fibcalc
