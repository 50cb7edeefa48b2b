#pragma once

#include <string>
#include <vector>

#include "fibcalc/polynomial.hpp"
#include "fibcalc/rational.hpp"
#include "fibcalc/sequence.hpp"

namespace fibcalc {

/// Truncated formal series T = sum_{k=0}^{N} c_k D^k in the F-derivative D,
/// with exact coefficients. Order N is fixed at construction; combining
/// series of different orders or base sequences is an error, never a silent
/// truncation. Acting on polynomials of degree <= N is exact because D^k
/// annihilates them for k > degree.
class OperatorSeries {
  public:
    /// order = coeffs.size() - 1; coeffs must be non-empty.
    OperatorSeries(SequenceSpec spec, std::vector<Rational> coeffs);

    static OperatorSeries identity(const SequenceSpec& spec, std::size_t order);
    static OperatorSeries zero(const SequenceSpec& spec, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const SequenceSpec& spec() const { return spec_; }

    /// Plain-basis coefficient c_k (zero beyond the order).
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Divided-basis view a_k = c_k * F_k!.
    Rational divided_coeff(std::size_t k) const;
    std::vector<Rational> divided_coeffs() const;

    /// Drop coefficients above new_order (new_order <= order).
    OperatorSeries truncated(std::size_t new_order) const;

    /// "c: [c_0, c_1, ...]"
    std::string str_plain() const;
    /// "a: [a_0, a_1, ...]"
    std::string str_divided() const;

    friend bool operator==(const OperatorSeries& a, const OperatorSeries& b) {
        return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }

  private:
    SequenceSpec spec_;
    std::vector<Rational> coeffs_;
};

/// A series with c_0 = 0 and c_1 != 0; lowers polynomial degree by one.
class DeltaOperator {
  public:
    explicit DeltaOperator(OperatorSeries series);

    const OperatorSeries& series() const { return series_; }
    operator const OperatorSeries&() const { return series_; }
    std::size_t order() const { return series_.order(); }
    const SequenceSpec& spec() const { return series_.spec(); }

  private:
    OperatorSeries series_;
};

/// T p, exact. Throws TruncationError when deg p exceeds T's order.
Polynomial apply(const OperatorSeries& op, const Polynomial& p);

/// The F-derivative itself: D x^n = F_n x^{n-1}. Needs order >= 1.
DeltaOperator f_derivative(const SequenceSpec& spec, std::size_t order);

/// One D step on a polynomial (no series, no order cap).
Polynomial f_derivative_apply(const SequenceSpec& spec, const Polynomial& p);

/// E^y = exp_F{y D}: c_k = y^k / F_k!.
OperatorSeries translation(const SequenceSpec& spec, const Rational& y, std::size_t order);

/// p(x +_F y) = E^y p.
Polynomial f_shift_value(const SequenceSpec& spec, const Polynomial& p, const Rational& y);

/// Cauchy product truncated at the common order. Spec and order must match.
OperatorSeries multiply(const OperatorSeries& a, const OperatorSeries& b);

OperatorSeries operator+(const OperatorSeries& a, const OperatorSeries& b);
OperatorSeries operator-(const OperatorSeries& a, const OperatorSeries& b);
OperatorSeries operator*(const Rational& s, const OperatorSeries& a);

/// Multiplicative inverse up to the order. Throws NotInvertibleError when
/// c_0 = 0 (exactly the "T1 = 0" case).
OperatorSeries invert(const OperatorSeries& op);

/// Graves-Pincherle derivative T' = T x^ - x^ T; formal d/dD on the
/// indicator, so the result has coefficient k*c_k at index k-1 and the
/// order drops by one (a pure constant maps to the zero series).
OperatorSeries pincherle(const OperatorSeries& op);

/// x^_F x^n = (n+1)/F_{n+1} x^{n+1}; not a member of the series algebra.
Polynomial xhat_apply(const SequenceSpec& spec, const Polynomial& p);

/// Monomial-wise x^{n+1} -> F_{n+1}/(n+1) x^n; annihilates constants.
Polynomial xhat_inverse_apply(const SequenceSpec& spec, const Polynomial& p);

/// c_0 = 0 and c_1 != 0.
bool is_delta(const OperatorSeries& op);

/// T^k; negative k inverts first (requires c_0 != 0).
OperatorSeries power(const OperatorSeries& op, int k);

/// Compositional inverse of a delta indicator: r with q(r(z)) = z through
/// the order, found by triangular solve in the plain basis.
OperatorSeries compositional_inverse(const OperatorSeries& q);

/// outer(inner(z)) on indicators; inner must have zero constant term.
OperatorSeries compose_indicator(const OperatorSeries& outer, const OperatorSeries& inner);

// Named delta operators.

/// Delta_F = E^1 - I.
DeltaOperator forward_difference(const SequenceSpec& spec, std::size_t order);
/// Nabla_F = I - E^{-1}.
DeltaOperator backward_difference(const SequenceSpec& spec, std::size_t order);
/// A = D E^a = sum_k a^k/F_k! D^{k+1}.
DeltaOperator abel_op(const SequenceSpec& spec, const Rational& a, std::size_t order);
/// L = D (D - I)^{-1} = -sum_{k>=1} D^k.
DeltaOperator laguerre_op(const SequenceSpec& spec, std::size_t order);

}  // namespace fibcalc
