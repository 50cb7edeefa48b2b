#include "fibcalc/umbral.hpp"

#include <sstream>
#include <stdexcept>

#include "fibcalc/errors.hpp"
#include "fibcalc/series.hpp"

namespace fibcalc {

namespace {

Rational term_q(const SequenceSpec& spec, std::size_t n) { return Rational(term(spec, n)); }

Rational factorial_q(const SequenceSpec& spec, std::size_t n) {
    return Rational(f_factorial(spec, n));
}

/// P with Q = D P, i.e. coefficients of Q shifted down one index.
OperatorSeries shift_down(const OperatorSeries& q) {
    std::vector<Rational> cs(q.order(), Rational(0));
    for (std::size_t k = 1; k <= q.order(); ++k) cs[k - 1] = q.coeff(k);
    if (cs.empty()) cs.push_back(Rational(0));
    return OperatorSeries(q.spec(), std::move(cs));
}

/// Ordinary binomial coefficient C(n, k).
BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

void require_order(const DeltaOperator& Q, std::size_t N, const char* who) {
    if (Q.order() < N + 1) {
        std::ostringstream msg;
        msg << who << " needs operator order >= " << (N + 1) << ", got " << Q.order();
        throw OrderMismatchError(msg.str());
    }
}

/// z-coefficients of exp_F{x r(z)} as polynomials in x, through z-order N.
/// r must have zero constant term.
std::vector<Polynomial> exp_f_of(const SequenceSpec& spec, const std::vector<Rational>& r,
                                 std::size_t N) {
    std::vector<Polynomial> out(N + 1);
    out[0] = Polynomial::constant(Rational(1));
    std::vector<Rational> r_pow(N + 1, Rational(0));
    r_pow[0] = Rational(1);
    for (std::size_t m = 1; m <= N; ++m) {
        r_pow = series::mul(r_pow, r, N);
        const Rational scale = Rational(1) / factorial_q(spec, m);
        for (std::size_t k = m; k <= N; ++k) {
            if (r_pow[k].is_zero()) continue;
            out[k] += Polynomial::monomial(r_pow[k] * scale, m);
        }
    }
    return out;
}

}  // namespace

PolySequence::PolySequence(FamilyKind kind, std::string label, SequenceSpec spec,
                           std::vector<Polynomial> polys)
    : kind_(kind), label_(std::move(label)), spec_(std::move(spec)), polys_(std::move(polys)) {
    if (polys_.empty()) {
        throw std::invalid_argument("polynomial sequence needs at least q_0");
    }
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        if (polys_[n].degree() != static_cast<int>(n)) {
            std::ostringstream msg;
            msg << "sequence entry " << n << " has degree " << polys_[n].degree();
            throw std::invalid_argument(msg.str());
        }
    }
    if (kind_ == FamilyKind::Basic) {
        if (polys_[0] != Polynomial::constant(Rational(1))) {
            throw std::invalid_argument("basic sequence needs q_0 = 1");
        }
        for (std::size_t n = 1; n < polys_.size(); ++n) {
            if (!polys_[n].eval(Rational(0)).is_zero()) {
                std::ostringstream msg;
                msg << "basic sequence entry " << n << " does not vanish at 0";
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

std::string PolySequence::str() const {
    std::ostringstream out;
    for (std::size_t n = 0; n < polys_.size(); ++n) {
        if (n) out << "\n";
        out << "n=" << n << ": " << polys_[n].str();
    }
    return out.str();
}

PolySequence basic_sequence(const DeltaOperator& Q, std::size_t N, std::string label) {
    require_order(Q, N, "basic_sequence");
    const SequenceSpec& spec = Q.spec();
    const OperatorSeries step = invert(pincherle(Q.series()));
    std::vector<Polynomial> polys;
    polys.reserve(N + 1);
    polys.push_back(Polynomial::constant(Rational(1)));
    for (std::size_t n = 1; n <= N; ++n) {
        const Polynomial w = apply(step, polys.back());
        polys.push_back(Rational(term(spec, n), BigInt(n)) * xhat_apply(spec, w));
    }
    // The two defining conditions are theorems for this construction; check
    // them anyway so a bad custom sequence cannot slip through.
    for (std::size_t n = 1; n <= N; ++n) {
        if (apply(Q.series(), polys[n]) != term_q(spec, n) * polys[n - 1]) {
            throw std::logic_error("generated sequence violates Q q_n = F_n q_{n-1}");
        }
    }
    return PolySequence(FamilyKind::Basic, std::move(label), spec, std::move(polys));
}

std::array<Polynomial, 4> rodrigues_variants(const DeltaOperator& Q, std::size_t n) {
    require_order(Q, n, "rodrigues_variants");
    const SequenceSpec& spec = Q.spec();
    std::array<Polynomial, 4> out;
    const Polynomial one = Polynomial::constant(Rational(1));
    const OperatorSeries p_inv = invert(shift_down(Q.series()));  // order Q.order-1

    // (1): Q' P^{-n-1} x^n
    out[0] = apply(pincherle(Q.series()),
                   apply(power(p_inv, static_cast<int>(n) + 1),
                         Polynomial::monomial(Rational(1), n)));

    if (n == 0) {
        out[1] = one;
        out[2] = one;
        out[3] = one;
        return out;
    }
    const Rational ratio = Rational(term(spec, n), BigInt(n));  // F_n / n

    // (2): P^{-n} x^n - F_n/n (P^{-n})' x^{n-1}
    const OperatorSeries p_inv_n = power(p_inv, static_cast<int>(n));
    out[1] = apply(p_inv_n, Polynomial::monomial(Rational(1), n)) -
             ratio * apply(pincherle(p_inv_n), Polynomial::monomial(Rational(1), n - 1));

    // (3): F_n/n x^_F P^{-n} x^{n-1}
    out[2] = ratio * xhat_apply(spec, apply(p_inv_n, Polynomial::monomial(Rational(1), n - 1)));

    // (4): iterated Rodrigues step
    out[3] = basic_sequence(Q, n).at(n);

    return out;
}

Verification verify_binomial_type(const PolySequence& seq, const Rational& y) {
    if (seq.kind() != FamilyKind::Basic) {
        throw std::invalid_argument("binomial-type check applies to basic sequences");
    }
    const SequenceSpec& spec = seq.spec();
    for (std::size_t n = 0; n <= seq.max_index(); ++n) {
        const Polynomial lhs = f_shift_value(spec, seq.at(n), y);
        Polynomial rhs;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational weight =
                Rational(fibonomial(spec, n, k)) * seq.at(n - k).eval(y);
            rhs += weight * seq.at(k);
        }
        if (lhs != rhs) {
            return Verification::fail(static_cast<int>(n), "binomial-type identity");
        }
    }
    return Verification::pass();
}

std::vector<Rational> expand_operator(const OperatorSeries& T, const DeltaOperator& Q,
                                      const PolySequence& basic) {
    std::vector<Rational> out;
    out.reserve(basic.max_index() + 1);
    for (std::size_t n = 0; n <= basic.max_index(); ++n) {
        out.push_back(apply(T, basic.at(n)).eval(Rational(0)));
    }
    return out;
}

OperatorSeries assemble_expansion(const DeltaOperator& Q, const std::vector<Rational>& divided) {
    const SequenceSpec& spec = Q.spec();
    OperatorSeries acc = OperatorSeries::zero(spec, Q.order());
    OperatorSeries q_pow = OperatorSeries::identity(spec, Q.order());
    for (std::size_t n = 0; n < divided.size(); ++n) {
        if (n > 0) q_pow = multiply(q_pow, Q.series());
        if (divided[n].is_zero()) continue;
        acc = acc + (divided[n] / factorial_q(spec, n)) * q_pow;
    }
    return acc;
}

PolySequence sheffer_from_S(const DeltaOperator& Q, const OperatorSeries& S, std::size_t N,
                            std::string label) {
    require_order(Q, N, "sheffer_from_S");
    const OperatorSeries s_inv = invert(S);
    const PolySequence basic = basic_sequence(Q, N);
    std::vector<Polynomial> polys;
    polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        polys.push_back(apply(s_inv, basic.at(n)));
    }
    for (std::size_t n = 1; n <= N; ++n) {
        if (apply(Q.series(), polys[n]) != term_q(Q.spec(), n) * polys[n - 1]) {
            throw std::logic_error("Sheffer family violates Q s_n = F_n s_{n-1}");
        }
    }
    return PolySequence(FamilyKind::Sheffer, std::move(label), Q.spec(), std::move(polys));
}

Polynomial sheffer_recurrence(const DeltaOperator& Q, const OperatorSeries& S,
                              const Polynomial& s_n, std::size_t n) {
    const SequenceSpec& spec = Q.spec();
    const std::size_t inner_order = Q.order() - 1;
    const Polynomial w = apply(invert(pincherle(Q.series())), s_n);
    const OperatorSeries log_deriv =
        multiply(pincherle(S), invert(S).truncated(inner_order));
    const Polynomial bracket = xhat_apply(spec, w) - apply(log_deriv, w);
    return Rational(term(spec, n + 1), BigInt(n + 1)) * bracket;
}

ShefferFamily hermite_family(const SequenceSpec& spec, const Rational& a, std::size_t N) {
    const std::size_t order = N + 2;
    // S^{-1} = exp_F{-a D^2/2}; S is its series inverse. (exp_F is not
    // multiplicative under the F-product, so this is the definition that
    // matches the closed Hermite sum.)
    std::vector<Rational> cs(order + 1, Rational(0));
    Rational coeff(1);
    for (std::size_t k = 0; 2 * k <= order; ++k) {
        cs[2 * k] = coeff / factorial_q(spec, k);
        coeff *= -a / Rational(2);
    }
    const OperatorSeries s_inverse(spec, std::move(cs));

    std::vector<Polynomial> polys;
    polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial h;
        Rational half_a_pow(1);  // (-a/2)^k
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            const Rational beta = half_a_pow / factorial_q(spec, k);
            h += Polynomial::monomial(beta * Rational(f_falling(spec, n, 2 * k)), n - 2 * k);
            half_a_pow *= -a / Rational(2);
        }
        polys.push_back(std::move(h));
    }
    return ShefferFamily{f_derivative(spec, order), invert(s_inverse),
                         PolySequence(FamilyKind::Sheffer, "hermite", spec, std::move(polys))};
}

ShefferFamily laguerre_family(const SequenceSpec& spec, int alpha, std::size_t N) {
    if (alpha < -1) {
        throw std::invalid_argument("laguerre order must be an integer >= -1");
    }
    const std::size_t order = N + 2;
    const DeltaOperator Q = laguerre_op(spec, order);
    const OperatorSeries one_minus_d =
        OperatorSeries::identity(spec, order) - f_derivative(spec, order).series();
    const OperatorSeries S = power(one_minus_d, -(alpha + 1));

    if (alpha == -1) {
        PolySequence seq = basic_sequence(Q, N, "laguerre");
        return ShefferFamily{Q, S, std::move(seq)};
    }

    std::vector<Polynomial> polys;
    polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial l;
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational c = Rational(f_factorial(spec, n), f_factorial(spec, k)) *
                               Rational(binomial(static_cast<unsigned long>(alpha) + n, n - k)) *
                               Rational((k % 2) ? -1 : 1);
            l += Polynomial::monomial(c, k);
        }
        polys.push_back(std::move(l));
    }
    return ShefferFamily{Q, S,
                         PolySequence(FamilyKind::Sheffer, "laguerre", spec, std::move(polys))};
}

ShefferFamily bernoulli_family(const SequenceSpec& spec, std::size_t N) {
    const std::size_t order = N + 2;
    std::vector<Rational> cs(order + 1, Rational(0));
    for (std::size_t k = 0; k <= order; ++k) {
        cs[k] = Rational(1) / factorial_q(spec, k + 1);
    }
    const OperatorSeries s_inverse(spec, std::move(cs));

    std::vector<Polynomial> polys;
    polys.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Polynomial b;
        for (std::size_t k = 0; k <= n; ++k) {
            b += Polynomial::monomial(
                Rational(fibonomial(spec, n, k)) / term_q(spec, k + 1), n - k);
        }
        polys.push_back(std::move(b));
    }
    return ShefferFamily{f_derivative(spec, order), invert(s_inverse),
                         PolySequence(FamilyKind::Sheffer, "bernoulli", spec, std::move(polys))};
}

Verification verify_sheffer_binomial(const PolySequence& sheffer, const PolySequence& basic,
                                     const Rational& y) {
    const SequenceSpec& spec = sheffer.spec();
    const std::size_t N = std::min(sheffer.max_index(), basic.max_index());
    for (std::size_t n = 0; n <= N; ++n) {
        const Polynomial lhs = f_shift_value(spec, sheffer.at(n), y);
        Polynomial rhs;
        for (std::size_t k = 0; k <= n; ++k) {
            rhs += (Rational(fibonomial(spec, n, k)) * basic.at(n - k).eval(y)) * sheffer.at(k);
        }
        if (lhs != rhs) {
            return Verification::fail(static_cast<int>(n), "Sheffer binomial theorem");
        }
        Polynomial corollary;
        for (std::size_t k = 0; k <= n; ++k) {
            corollary += (Rational(fibonomial(spec, n, k)) *
                          sheffer.at(k).eval(Rational(0))) * basic.at(n - k);
        }
        if (corollary != sheffer.at(n)) {
            return Verification::fail(static_cast<int>(n), "Sheffer binomial corollary at x=0");
        }
    }
    return Verification::pass();
}

Verification verify_s_inverse_expansion(const PolySequence& sheffer, const DeltaOperator& Q,
                                        const OperatorSeries& S) {
    const SequenceSpec& spec = sheffer.spec();
    std::vector<Rational> divided;
    divided.reserve(sheffer.max_index() + 1);
    for (std::size_t k = 0; k <= sheffer.max_index(); ++k) {
        divided.push_back(sheffer.at(k).eval(Rational(0)));
    }
    const OperatorSeries reconstructed = assemble_expansion(Q, divided);
    const OperatorSeries s_inv = invert(S);
    for (std::size_t j = 0; j <= sheffer.max_index(); ++j) {
        const Polynomial monomial = Polynomial::monomial(Rational(1), j);
        if (apply(reconstructed, monomial) != apply(s_inv, monomial)) {
            return Verification::fail(static_cast<int>(j), "S^{-1} expansion in s_k(0)");
        }
    }
    return Verification::pass();
}

Verification verify_second_expansion(const DeltaOperator& Q, const OperatorSeries& S,
                                     const PolySequence& sheffer, const Polynomial& p,
                                     const Rational& y) {
    const SequenceSpec& spec = Q.spec();
    if (p.degree() > static_cast<int>(sheffer.max_index())) {
        throw OrderMismatchError("second expansion needs the family up to deg p");
    }
    const Polynomial lhs = f_shift_value(spec, p, y);
    const Polynomial sp = apply(S, p);
    Polynomial rhs;
    Polynomial q_pow = sp;
    for (std::size_t k = 0; static_cast<int>(k) <= p.degree(); ++k) {
        if (k > 0) q_pow = apply(Q.series(), q_pow);
        rhs += (sheffer.at(k).eval(y) / factorial_q(spec, k)) * q_pow;
    }
    if (lhs != rhs) {
        return Verification::fail(0, "second expansion identity");
    }
    return Verification::pass();
}

namespace {

struct TransferParts {
    OperatorSeries s_target;  // S with target = D S
    OperatorSeries p_source;  // P with source = D P
};

TransferParts transfer_parts(const DeltaOperator& target, const DeltaOperator& source) {
    if (!(target.spec() == source.spec()) || target.order() != source.order()) {
        throw OrderMismatchError("transfer needs matching spec and order");
    }
    return {shift_down(target.series()), shift_down(source.series())};
}

}  // namespace

Polynomial umbral_transfer_expansion(const DeltaOperator& target, const DeltaOperator& source,
                                     const PolySequence& source_basic, std::size_t n) {
    const auto [s_target, p_source] = transfer_parts(target, source);
    const OperatorSeries primes =
        multiply(pincherle(target.series()), invert(pincherle(source.series())));
    const OperatorSeries conjugator =
        multiply(power(invert(s_target), static_cast<int>(n) + 1),
                 power(p_source, static_cast<int>(n) + 1));
    return apply(multiply(primes, conjugator), source_basic.at(n));
}

Polynomial umbral_transfer_conjugation(const DeltaOperator& target, const DeltaOperator& source,
                                       const PolySequence& source_basic, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("conjugation transfer is defined for n >= 1");
    }
    const auto [s_target, p_source] = transfer_parts(target, source);
    const SequenceSpec& spec = target.spec();
    const OperatorSeries mixer = power(multiply(p_source, invert(s_target)),
                                       static_cast<int>(n));
    return xhat_apply(spec, apply(mixer, xhat_inverse_apply(spec, source_basic.at(n))));
}

Verification verify_gf(const PolySequence& basic, const DeltaOperator& Q) {
    const SequenceSpec& spec = basic.spec();
    const std::size_t N = basic.max_index();
    const OperatorSeries r = compositional_inverse(Q.series());
    const std::vector<Polynomial> gf = exp_f_of(spec, r.coeffs(), N);
    for (std::size_t k = 0; k <= N; ++k) {
        if (gf[k] != (Rational(1) / factorial_q(spec, k)) * basic.at(k)) {
            return Verification::fail(static_cast<int>(k), "basic generating function");
        }
    }
    return Verification::pass();
}

Verification verify_sheffer_gf(const PolySequence& sheffer, const DeltaOperator& Q,
                               const OperatorSeries& S) {
    const SequenceSpec& spec = sheffer.spec();
    const std::size_t N = sheffer.max_index();
    const OperatorSeries r = compositional_inverse(Q.series());
    const std::vector<Rational> composed = series::compose(S.coeffs(), r.coeffs(), N);
    if (composed[0].is_zero()) {
        throw std::logic_error("s(q^{-1}(z)) lost its constant term");
    }
    const std::vector<Rational> reciprocal = series::reciprocal(composed, N);
    const std::vector<Polynomial> gf = exp_f_of(spec, r.coeffs(), N);
    for (std::size_t k = 0; k <= N; ++k) {
        Polynomial rhs;
        for (std::size_t j = 0; j <= k; ++j) {
            if (reciprocal[k - j].is_zero()) continue;
            rhs += reciprocal[k - j] * gf[j];
        }
        if (rhs != (Rational(1) / factorial_q(spec, k)) * sheffer.at(k)) {
            return Verification::fail(static_cast<int>(k), "Sheffer generating function");
        }
    }
    return Verification::pass();
}

}  // namespace fibcalc
