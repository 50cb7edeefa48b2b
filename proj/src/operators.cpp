#include "fibcalc/operators.hpp"

#include <sstream>
#include <stdexcept>

#include "fibcalc/errors.hpp"
#include "fibcalc/series.hpp"

namespace fibcalc {

namespace {

void require_compatible(const OperatorSeries& a, const OperatorSeries& b) {
    if (!(a.spec() == b.spec())) {
        throw OrderMismatchError("operator series built over different base sequences");
    }
    if (a.order() != b.order()) {
        std::ostringstream msg;
        msg << "operator series orders differ: " << a.order() << " vs " << b.order();
        throw OrderMismatchError(msg.str());
    }
}

std::string render(const char* tag, const std::vector<Rational>& cs) {
    std::ostringstream out;
    out << tag << ": [";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out << ", ";
        out << cs[i].str();
    }
    out << "]";
    return out.str();
}

}  // namespace

OperatorSeries::OperatorSeries(SequenceSpec spec, std::vector<Rational> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("operator series needs at least the constant coefficient");
    }
}

OperatorSeries OperatorSeries::identity(const SequenceSpec& spec, std::size_t order) {
    std::vector<Rational> cs(order + 1, Rational(0));
    cs[0] = Rational(1);
    return OperatorSeries(spec, std::move(cs));
}

OperatorSeries OperatorSeries::zero(const SequenceSpec& spec, std::size_t order) {
    return OperatorSeries(spec, std::vector<Rational>(order + 1, Rational(0)));
}

const Rational& OperatorSeries::coeff(std::size_t k) const {
    static const Rational kZero{};
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

Rational OperatorSeries::divided_coeff(std::size_t k) const {
    return coeff(k) * Rational(f_factorial(spec_, k));
}

std::vector<Rational> OperatorSeries::divided_coeffs() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.push_back(divided_coeff(k));
    return out;
}

OperatorSeries OperatorSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) {
        throw OrderMismatchError("truncated() cannot raise the order");
    }
    std::vector<Rational> cs(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return OperatorSeries(spec_, std::move(cs));
}

std::string OperatorSeries::str_plain() const { return render("c", coeffs_); }

std::string OperatorSeries::str_divided() const { return render("a", divided_coeffs()); }

DeltaOperator::DeltaOperator(OperatorSeries series) : series_(std::move(series)) {
    if (!is_delta(series_)) {
        throw NotDeltaError("series is not a delta operator (needs c_0 = 0, c_1 != 0)");
    }
}

Polynomial f_derivative_apply(const SequenceSpec& spec, const Polynomial& p) {
    if (p.degree() < 1) return Polynomial();
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()), Rational(0));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(p.degree()); ++i) {
        out[i - 1] = p.coeff(i) * Rational(term(spec, i));
    }
    return Polynomial(std::move(out));
}

Polynomial apply(const OperatorSeries& op, const Polynomial& p) {
    if (p.degree() > static_cast<int>(op.order())) {
        std::ostringstream msg;
        msg << "polynomial of degree " << p.degree() << " exceeds series order " << op.order();
        throw TruncationError(msg.str());
    }
    Polynomial acc;
    Polynomial derivative = p;
    for (std::size_t k = 0; k <= op.order(); ++k) {
        if (k > 0) derivative = f_derivative_apply(op.spec(), derivative);
        if (derivative.is_zero()) break;
        if (!op.coeff(k).is_zero()) acc += op.coeff(k) * derivative;
    }
    return acc;
}

DeltaOperator f_derivative(const SequenceSpec& spec, std::size_t order) {
    if (order < 1) {
        throw std::invalid_argument("f_derivative needs order >= 1");
    }
    std::vector<Rational> cs(order + 1, Rational(0));
    cs[1] = Rational(1);
    return DeltaOperator(OperatorSeries(spec, std::move(cs)));
}

OperatorSeries translation(const SequenceSpec& spec, const Rational& y, std::size_t order) {
    std::vector<Rational> cs(order + 1, Rational(0));
    Rational yk(1);
    for (std::size_t k = 0; k <= order; ++k) {
        cs[k] = yk / Rational(f_factorial(spec, k));
        yk *= y;
    }
    return OperatorSeries(spec, std::move(cs));
}

Polynomial f_shift_value(const SequenceSpec& spec, const Polynomial& p, const Rational& y) {
    const std::size_t order = p.degree() < 0 ? 0 : static_cast<std::size_t>(p.degree());
    return apply(translation(spec, y, order), p);
}

OperatorSeries multiply(const OperatorSeries& a, const OperatorSeries& b) {
    require_compatible(a, b);
    return OperatorSeries(a.spec(), series::mul(a.coeffs(), b.coeffs(), a.order()));
}

OperatorSeries operator+(const OperatorSeries& a, const OperatorSeries& b) {
    require_compatible(a, b);
    std::vector<Rational> cs = a.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) cs[k] += b.coeff(k);
    return OperatorSeries(a.spec(), std::move(cs));
}

OperatorSeries operator-(const OperatorSeries& a, const OperatorSeries& b) {
    require_compatible(a, b);
    std::vector<Rational> cs = a.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) cs[k] -= b.coeff(k);
    return OperatorSeries(a.spec(), std::move(cs));
}

OperatorSeries operator*(const Rational& s, const OperatorSeries& a) {
    std::vector<Rational> cs = a.coeffs();
    for (Rational& c : cs) c *= s;
    return OperatorSeries(a.spec(), std::move(cs));
}

OperatorSeries invert(const OperatorSeries& op) {
    if (op.coeff(0).is_zero()) {
        throw NotInvertibleError("series with T1 = 0 has no inverse");
    }
    return OperatorSeries(op.spec(), series::reciprocal(op.coeffs(), op.order()));
}

OperatorSeries pincherle(const OperatorSeries& op) {
    const std::size_t out_order = op.order() == 0 ? 0 : op.order() - 1;
    std::vector<Rational> cs(out_order + 1, Rational(0));
    for (std::size_t k = 1; k <= op.order(); ++k) {
        cs[k - 1] = Rational(static_cast<int>(k)) * op.coeff(k);
    }
    return OperatorSeries(op.spec(), std::move(cs));
}

Polynomial xhat_apply(const SequenceSpec& spec, const Polynomial& p) {
    if (p.is_zero()) return p;
    const std::size_t deg = static_cast<std::size_t>(p.degree());
    std::vector<Rational> out(deg + 2, Rational(0));
    for (std::size_t n = 0; n <= deg; ++n) {
        if (p.coeff(n).is_zero()) continue;
        const BigInt t = term(spec, n + 1);
        if (t == 0) {
            throw DegenerateSequenceError("x^_F needs a nonzero sequence term");
        }
        out[n + 1] = p.coeff(n) * Rational(BigInt(n + 1), t);
    }
    return Polynomial(std::move(out));
}

Polynomial xhat_inverse_apply(const SequenceSpec& spec, const Polynomial& p) {
    if (p.degree() < 1) return Polynomial();
    const std::size_t deg = static_cast<std::size_t>(p.degree());
    std::vector<Rational> out(deg, Rational(0));
    for (std::size_t n = 1; n <= deg; ++n) {
        out[n - 1] = p.coeff(n) * Rational(term(spec, n), BigInt(n));
    }
    return Polynomial(std::move(out));
}

bool is_delta(const OperatorSeries& op) {
    return op.coeff(0).is_zero() && op.order() >= 1 && !op.coeff(1).is_zero();
}

OperatorSeries power(const OperatorSeries& op, int k) {
    if (k < 0) {
        return power(invert(op), -k);
    }
    OperatorSeries acc = OperatorSeries::identity(op.spec(), op.order());
    for (int i = 0; i < k; ++i) acc = multiply(acc, op);
    return acc;
}

OperatorSeries compose_indicator(const OperatorSeries& outer, const OperatorSeries& inner) {
    require_compatible(outer, inner);
    if (!inner.coeff(0).is_zero()) {
        throw std::domain_error("indicator composition needs inner constant term zero");
    }
    return OperatorSeries(outer.spec(), series::compose(outer.coeffs(), inner.coeffs(),
                                                        outer.order()));
}

OperatorSeries compositional_inverse(const OperatorSeries& q) {
    if (!is_delta(q)) {
        throw NotDeltaError("compositional inverse needs a delta indicator");
    }
    const std::size_t order = q.order();
    std::vector<Rational> r(order + 1, Rational(0));
    r[1] = Rational(1) / q.coeff(1);
    for (std::size_t n = 2; n <= order; ++n) {
        // With r_n still zero, [z^n] q(r(z)) misses exactly q_1 * r_n.
        const std::vector<Rational> composed = series::compose(q.coeffs(), r, n);
        r[n] = -composed[n] / q.coeff(1);
    }
    OperatorSeries result(q.spec(), std::move(r));
    // Exact by construction; re-substitution guards the solve.
    const std::vector<Rational> check = series::compose(q.coeffs(), result.coeffs(), order);
    for (std::size_t n = 0; n <= order; ++n) {
        if (check[n] != (n == 1 ? Rational(1) : Rational(0))) {
            throw std::logic_error("compositional inverse failed re-substitution");
        }
    }
    return result;
}

DeltaOperator forward_difference(const SequenceSpec& spec, std::size_t order) {
    return DeltaOperator(translation(spec, Rational(1), order) -
                         OperatorSeries::identity(spec, order));
}

DeltaOperator backward_difference(const SequenceSpec& spec, std::size_t order) {
    return DeltaOperator(OperatorSeries::identity(spec, order) -
                         translation(spec, Rational(-1), order));
}

DeltaOperator abel_op(const SequenceSpec& spec, const Rational& a, std::size_t order) {
    std::vector<Rational> cs(order + 1, Rational(0));
    Rational ak(1);
    for (std::size_t k = 1; k <= order; ++k) {
        cs[k] = ak / Rational(f_factorial(spec, k - 1));
        ak *= a;
    }
    return DeltaOperator(OperatorSeries(spec, std::move(cs)));
}

DeltaOperator laguerre_op(const SequenceSpec& spec, std::size_t order) {
    std::vector<Rational> cs(order + 1, Rational(0));
    for (std::size_t k = 1; k <= order; ++k) cs[k] = Rational(-1);
    return DeltaOperator(OperatorSeries(spec, std::move(cs)));
}

}  // namespace fibcalc
