#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "fibcalc/cobweb.hpp"
#include "fibcalc/operators.hpp"
#include "fibcalc/sequence.hpp"
#include "fibcalc/umbral.hpp"

namespace py = pybind11;
using namespace fibcalc;

namespace {

using MaybeSeq = std::optional<std::vector<long long>>;

SequenceSpec to_spec(const MaybeSeq& sequence) {
    if (!sequence) return SequenceSpec::fibonacci();
    std::vector<BigInt> values;
    values.reserve(sequence->size());
    for (long long v : *sequence) values.emplace_back(static_cast<long>(v));
    return SequenceSpec::custom(std::move(values));
}

py::int_ to_py_int(const BigInt& z) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(r.num()), to_py_int(r.den()));
}

py::list coeff_list(const Polynomial& p) {
    py::list out;
    for (const Rational& c : p.coeffs()) out.append(to_fraction(c));
    return out;
}

DeltaOperator make_op(const SequenceSpec& spec, const std::string& name, const std::string& a,
                      std::size_t order) {
    if (name == "partial-f") return f_derivative(spec, order);
    if (name == "delta-f") return forward_difference(spec, order);
    if (name == "nabla-f") return backward_difference(spec, order);
    if (name == "abel") return abel_op(spec, Rational::parse(a), order);
    if (name == "laguerre") return laguerre_op(spec, order);
    throw std::invalid_argument("unknown operator '" + name + "'");
}

ShefferFamily make_family(const SequenceSpec& spec, const std::string& name,
                          const std::string& a, int alpha, std::size_t max_degree) {
    if (name == "hermite") return hermite_family(spec, Rational::parse(a), max_degree);
    if (name == "laguerre-alpha") return laguerre_family(spec, alpha, max_degree);
    if (name == "bernoulli") return bernoulli_family(spec, max_degree);
    throw std::invalid_argument("unknown family '" + name + "'");
}

py::list sequence_strings(const PolySequence& seq) {
    py::list out;
    for (const Polynomial& p : seq.polys()) out.append(p.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact fibonomial operator calculus and cobweb poset toolkit";
#ifdef FIBCALC_VERSION
    m.attr("__version__") = FIBCALC_VERSION;
#else
    m.attr("__version__") = "dev";
#endif

    m.def(
        "term",
        [](std::size_t n, const MaybeSeq& sequence) { return to_py_int(term(to_spec(sequence), n)); },
        py::arg("n"), py::arg("sequence") = py::none(),
        "n-th term of the base sequence (Fibonacci by default)");

    m.def(
        "f_factorial",
        [](std::size_t n, const MaybeSeq& sequence) {
            return to_py_int(f_factorial(to_spec(sequence), n));
        },
        py::arg("n"), py::arg("sequence") = py::none());

    m.def(
        "fibonomial",
        [](std::size_t n, std::size_t k, const MaybeSeq& sequence) {
            return to_py_int(fibonomial(to_spec(sequence), n, k));
        },
        py::arg("n"), py::arg("k"), py::arg("sequence") = py::none());

    m.def(
        "f_falling",
        [](std::size_t n, std::size_t k, const MaybeSeq& sequence) {
            return to_py_int(f_falling(to_spec(sequence), n, k));
        },
        py::arg("n"), py::arg("k"), py::arg("sequence") = py::none());

    m.def(
        "basic_sequence",
        [](const std::string& op, std::size_t max_degree, const std::string& a) {
            const SequenceSpec spec = SequenceSpec::fibonacci();
            return sequence_strings(
                basic_sequence(make_op(spec, op, a, max_degree + 2), max_degree, op));
        },
        py::arg("op"), py::arg("max_degree") = 8, py::arg("a") = "1",
        "Basic polynomial sequence rows as strings; op is one of partial-f, "
        "delta-f, nabla-f, abel, laguerre");

    m.def(
        "basic_coeffs",
        [](const std::string& op, std::size_t n, const std::string& a) {
            const SequenceSpec spec = SequenceSpec::fibonacci();
            return coeff_list(
                basic_sequence(make_op(spec, op, a, n + 2), n, op).at(n));
        },
        py::arg("op"), py::arg("n"), py::arg("a") = "1",
        "Ascending-degree coefficients of the n-th basic polynomial as Fractions");

    m.def(
        "sheffer_sequence",
        [](const std::string& family, std::size_t max_degree, const std::string& a, int alpha) {
            return sequence_strings(
                make_family(SequenceSpec::fibonacci(), family, a, alpha, max_degree).seq);
        },
        py::arg("family"), py::arg("max_degree") = 8, py::arg("a") = "1", py::arg("alpha") = 1,
        "Sheffer family rows as strings; family is hermite, laguerre-alpha, or bernoulli");

    m.def(
        "sheffer_coeffs",
        [](const std::string& family, std::size_t n, const std::string& a, int alpha) {
            return coeff_list(
                make_family(SequenceSpec::fibonacci(), family, a, alpha, n).seq.at(n));
        },
        py::arg("family"), py::arg("n"), py::arg("a") = "1", py::arg("alpha") = 1);

    m.def(
        "verify_binomial_type",
        [](const std::string& op, std::size_t max_degree, const std::string& y,
           const std::string& a) {
            const SequenceSpec spec = SequenceSpec::fibonacci();
            const PolySequence seq =
                basic_sequence(make_op(spec, op, a, max_degree + 2), max_degree, op);
            return verify_binomial_type(seq, Rational::parse(y)).ok;
        },
        py::arg("op"), py::arg("max_degree") = 8, py::arg("y") = "1", py::arg("a") = "1");

    m.def(
        "verify_gf",
        [](const std::string& op, std::size_t max_degree, const std::string& a) {
            const SequenceSpec spec = SequenceSpec::fibonacci();
            const DeltaOperator q = make_op(spec, op, a, max_degree + 2);
            return verify_gf(basic_sequence(q, max_degree, op), q).ok;
        },
        py::arg("op"), py::arg("max_degree") = 6, py::arg("a") = "1");

    m.def(
        "verify_sheffer_gf",
        [](const std::string& family, std::size_t max_degree, const std::string& a, int alpha) {
            const ShefferFamily fam =
                make_family(SequenceSpec::fibonacci(), family, a, alpha, max_degree);
            return verify_sheffer_gf(fam.seq, fam.Q, fam.S).ok;
        },
        py::arg("family"), py::arg("max_degree") = 6, py::arg("a") = "1", py::arg("alpha") = 1);

    m.def(
        "verify_transfer",
        [](const std::string& op, std::size_t max_degree, const std::string& a) {
            const SequenceSpec spec = SequenceSpec::fibonacci();
            const std::size_t order = max_degree + 2;
            const DeltaOperator target = make_op(spec, op, a, order);
            const DeltaOperator source = f_derivative(spec, order);
            const PolySequence monomials = basic_sequence(source, max_degree, "monomials");
            const PolySequence direct = basic_sequence(target, max_degree, op);
            for (std::size_t n = 0; n <= max_degree; ++n) {
                if (umbral_transfer_expansion(target, source, monomials, n) != direct.at(n)) {
                    return false;
                }
                if (n >= 1 && umbral_transfer_conjugation(target, source, monomials, n) !=
                                  direct.at(n)) {
                    return false;
                }
            }
            return true;
        },
        py::arg("op"), py::arg("max_degree") = 6, py::arg("a") = "1");

    m.def(
        "level_sizes",
        [](std::size_t max_level, const MaybeSeq& sequence) {
            return CobwebPoset(to_spec(sequence), max_level).level_sizes();
        },
        py::arg("max_level") = 8, py::arg("sequence") = py::none());

    m.def(
        "chain_x",
        [](std::size_t max_level, const MaybeSeq& sequence) {
            py::list out;
            for (const Vertex& v : chain_x(CobwebPoset(to_spec(sequence), max_level))) {
                out.append(py::make_tuple(v.j, v.s));
            }
            return out;
        },
        py::arg("max_level") = 8, py::arg("sequence") = py::none());

    m.def(
        "chain_y",
        [](std::size_t max_level, const MaybeSeq& sequence) {
            py::list out;
            for (const Vertex& v : chain_y(CobwebPoset(to_spec(sequence), max_level))) {
                out.append(py::make_tuple(v.j, v.s));
            }
            return out;
        },
        py::arg("max_level") = 8, py::arg("sequence") = py::none());

    m.def(
        "is_regular",
        [](std::size_t max_level, const MaybeSeq& sequence) {
            return is_regular(CobwebPoset(to_spec(sequence), max_level));
        },
        py::arg("max_level") = 8, py::arg("sequence") = py::none());

    m.def(
        "verify_realizer",
        [](std::size_t max_level, const MaybeSeq& sequence) {
            return verify_realizer(CobwebPoset(to_spec(sequence), max_level));
        },
        py::arg("max_level") = 8, py::arg("sequence") = py::none());

    m.def(
        "export_dot",
        [](std::size_t max_level, const MaybeSeq& sequence) {
            return export_dot(CobwebPoset(to_spec(sequence), max_level));
        },
        py::arg("max_level") = 8, py::arg("sequence") = py::none());
}
