#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fibcalc/operators.hpp"
#include "fibcalc/polynomial.hpp"

namespace fibcalc {

/// Outcome of an identity check: either a pass, or the smallest offending
/// index together with the name of the violated identity.
struct Verification {
    bool ok = true;
    int index = -1;
    std::string detail;

    explicit operator bool() const { return ok; }
    static Verification pass() { return {}; }
    static Verification fail(int index, std::string detail) {
        return {false, index, std::move(detail)};
    }
};

enum class FamilyKind { Basic, Sheffer };

/// Indexed family q_0..q_N with deg q_n = n. Basic families additionally
/// satisfy q_0 = 1 and q_n(0) = 0 for n >= 1; Sheffer families start from a
/// nonzero constant.
class PolySequence {
  public:
    PolySequence(FamilyKind kind, std::string label, SequenceSpec spec,
                 std::vector<Polynomial> polys);

    FamilyKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const SequenceSpec& spec() const { return spec_; }
    std::size_t max_index() const { return polys_.size() - 1; }
    const Polynomial& at(std::size_t n) const { return polys_.at(n); }
    const std::vector<Polynomial>& polys() const { return polys_; }

    /// One polynomial per line: "n=<index>: <rendering>".
    std::string str() const;

  private:
    FamilyKind kind_;
    std::string label_;
    SequenceSpec spec_;
    std::vector<Polynomial> polys_;
};

/// The unique basic sequence of Q up to index N via the Rodrigues step
/// q_n = F_n/n x^_F (Q')^{-1} q_{n-1}. Needs Q.order >= N+1.
PolySequence basic_sequence(const DeltaOperator& Q, std::size_t N,
                            std::string label = "basic");

/// q_n by all four Lagrange/Rodrigues routes (they agree by uniqueness):
///   [0] Q' P^{-n-1} x^n
///   [1] P^{-n} x^n - F_n/n (P^{-n})' x^{n-1}
///   [2] F_n/n x^_F P^{-n} x^{n-1}
///   [3] iterated Rodrigues step
/// where Q = D P. Needs Q.order >= n+1.
std::array<Polynomial, 4> rodrigues_variants(const DeltaOperator& Q, std::size_t n);

/// p_n(x +_F y) = sum_k binom(n,k)_F p_k(x) p_{n-k}(y) for every n <= N.
Verification verify_binomial_type(const PolySequence& seq, const Rational& y);

/// First expansion coefficients a_n = [T q_n](0) for n = 0..basic.max_index.
std::vector<Rational> expand_operator(const OperatorSeries& T, const DeltaOperator& Q,
                                      const PolySequence& basic);

/// sum_n a_n/F_n! Q^n at Q's order; inverse of expand_operator on monomials.
OperatorSeries assemble_expansion(const DeltaOperator& Q, const std::vector<Rational>& divided);

/// Sheffer family s_n = S^{-1} q_n for invertible S.
PolySequence sheffer_from_S(const DeltaOperator& Q, const OperatorSeries& S, std::size_t N,
                            std::string label = "sheffer");

/// s_{n+1} = F_{n+1}/(n+1) [x^_F - S'S^{-1}] (Q')^{-1} s_n.
Polynomial sheffer_recurrence(const DeltaOperator& Q, const OperatorSeries& S,
                              const Polynomial& s_n, std::size_t n);

/// A Sheffer family together with the operators that define it.
struct ShefferFamily {
    DeltaOperator Q;
    OperatorSeries S;
    PolySequence seq;
};

/// Hermite family for D relative to S with S^{-1} = exp_F{-a D^2/2}:
/// H_n = sum_k (-a)^k/(2^k F_k!) n_F^{(2k falling)} x^{n-2k}.
ShefferFamily hermite_family(const SequenceSpec& spec, const Rational& a, std::size_t N);

/// Laguerre family of integer order alpha >= -1 for L = D(D-I)^{-1} relative
/// to S = (I-D)^{-alpha-1}. alpha = -1 is the basic sequence itself;
/// otherwise the closed form sum_k F_n!/F_k! C(alpha+n, n-k) (-x)^k with the
/// ordinary binomial C.
ShefferFamily laguerre_family(const SequenceSpec& spec, int alpha, std::size_t N);

/// Bernoulli family of order 1 for D relative to S^{-1} = sum_{k>=1} D^{k-1}/F_k!:
/// B_n = sum_k 1/F_{k+1} binom(n,k)_F x^{n-k}.
ShefferFamily bernoulli_family(const SequenceSpec& spec, std::size_t N);

/// Sheffer binomial theorem s_n(x +_F y) = sum_k binom(n,k)_F s_k(x) q_{n-k}(y)
/// plus its x = 0 corollary, for every n up to the common max index.
Verification verify_sheffer_binomial(const PolySequence& sheffer, const PolySequence& basic,
                                     const Rational& y);

/// S^{-1} = sum_k s_k(0)/F_k! Q^k, compared through monomials of degree <= N.
Verification verify_s_inverse_expansion(const PolySequence& sheffer, const DeltaOperator& Q,
                                        const OperatorSeries& S);

/// Second expansion identity E^y p = sum_k s_k(y)/F_k! Q^k S p.
Verification verify_second_expansion(const DeltaOperator& Q, const OperatorSeries& S,
                                     const PolySequence& sheffer, const Polynomial& p,
                                     const Rational& y);

/// Basic-sequence transfer q_n = Q'(R')^{-1} S^{-n-1} P^{n+1} r_n between the
/// target Q = D S (basic {q_n}) and the source R = D P (basic {r_n}).
Polynomial umbral_transfer_expansion(const DeltaOperator& target, const DeltaOperator& source,
                                     const PolySequence& source_basic, std::size_t n);

/// Conjugation transfer q_n = x^_F (P S^{-1})^n x^_F^{-1} r_n, defined for n >= 1.
Polynomial umbral_transfer_conjugation(const DeltaOperator& target, const DeltaOperator& source,
                                       const PolySequence& source_basic, std::size_t n);

/// Generating function sum_k q_k(x)/F_k! z^k = exp_F{x Q^{-1}(z)} through
/// z-order basic.max_index.
Verification verify_gf(const PolySequence& basic, const DeltaOperator& Q);

/// Sheffer generating function
/// sum_k s_k(x)/F_k! z^k = (s(q^{-1}(z)))^{-1} exp_F{x q^{-1}(z)}.
Verification verify_sheffer_gf(const PolySequence& sheffer, const DeltaOperator& Q,
                               const OperatorSeries& S);

}  // namespace fibcalc
