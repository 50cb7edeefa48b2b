// Command-line front end: fibonomial evaluation, basic/Sheffer family
// generation, identity verification suites, and the cobweb poset toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "fibcalc/cobweb.hpp"
#include "fibcalc/errors.hpp"
#include "fibcalc/operators.hpp"
#include "fibcalc/polynomial.hpp"
#include "fibcalc/sequence.hpp"
#include "fibcalc/umbral.hpp"

using nlohmann::json;
using namespace fibcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputData = 3;

struct CommonOptions {
    std::string sequence_file;
    std::string format = "text";
};

SequenceSpec resolve_spec(const CommonOptions& opts) {
    if (opts.sequence_file.empty()) return SequenceSpec::fibonacci();
    return SequenceSpec::from_file(opts.sequence_file);
}

json poly_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [deg, num, den] : p.triples()) {
        out.push_back(json::array({deg, num, den}));
    }
    return out;
}

json sequence_json(const PolySequence& seq) {
    json out = json::array();
    for (const Polynomial& p : seq.polys()) out.push_back(poly_json(p));
    return out;
}

void print_sequence(const PolySequence& seq, const CommonOptions& opts, const json& header) {
    if (opts.format == "structured") {
        json doc = header;
        doc["polynomials"] = sequence_json(seq);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << seq.str() << "\n";
    }
}

DeltaOperator make_basic_op(const SequenceSpec& spec, const std::string& name,
                            const Rational& a, std::size_t order) {
    if (name == "partial-f") return f_derivative(spec, order);
    if (name == "delta-f") return forward_difference(spec, order);
    if (name == "nabla-f") return backward_difference(spec, order);
    if (name == "abel") return abel_op(spec, a, order);
    if (name == "laguerre") return laguerre_op(spec, order);
    throw CLI::ValidationError("--op", "unknown operator '" + name + "'");
}

int report(const Verification& v, const std::string& what) {
    if (v.ok) {
        std::cout << "ok: " << what << "\n";
        return kExitOk;
    }
    std::cerr << "FAIL: " << what << ": violated " << v.detail << " at n=" << v.index << "\n";
    return kExitVerifyFailure;
}

int cmd_fibonomial(const CommonOptions& opts, unsigned n, unsigned k) {
    const SequenceSpec spec = resolve_spec(opts);
    const BigInt value = fibonomial(spec, n, k);
    if (opts.format == "structured") {
        json doc{{"command", "fibonomial"}, {"n", n}, {"k", k}, {"value", value.get_str()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    return kExitOk;
}

int cmd_basic(const CommonOptions& opts, const std::string& op_name, const std::string& a_text,
              std::size_t max_degree) {
    const SequenceSpec spec = resolve_spec(opts);
    const Rational a = Rational::parse(a_text);
    const DeltaOperator op = make_basic_op(spec, op_name, a, max_degree + 2);
    const PolySequence seq = basic_sequence(op, max_degree, op_name);
    print_sequence(seq, opts, json{{"command", "basic"}, {"op", op_name}});
    return kExitOk;
}

int cmd_sheffer(const CommonOptions& opts, const std::string& family, const std::string& a_text,
                int alpha, std::size_t max_degree) {
    const SequenceSpec spec = resolve_spec(opts);
    const Rational a = Rational::parse(a_text);
    ShefferFamily fam = [&] {
        if (family == "hermite") return hermite_family(spec, a, max_degree);
        if (family == "laguerre-alpha") return laguerre_family(spec, alpha, max_degree);
        if (family == "bernoulli") return bernoulli_family(spec, max_degree);
        throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    }();
    print_sequence(fam.seq, opts, json{{"command", "sheffer"}, {"family", family}});
    return kExitOk;
}

std::vector<Rational> shift_values(const Rational& y) {
    return {y, Rational(-1), Rational(2), Rational(BigInt(-1), BigInt(2)),
            Rational(BigInt(3), BigInt(5))};
}

int suite_binomial_type(const SequenceSpec& spec, std::size_t N, const Rational& a,
                        const Rational& y) {
    const std::size_t order = N + 2;
    const std::vector<std::pair<std::string, DeltaOperator>> ops = {
        {"partial-f", f_derivative(spec, order)},
        {"delta-f", forward_difference(spec, order)},
        {"nabla-f", backward_difference(spec, order)},
        {"abel", abel_op(spec, a, order)},
        {"laguerre", laguerre_op(spec, order)},
    };
    for (const auto& [name, op] : ops) {
        const PolySequence seq = basic_sequence(op, N, name);
        for (const Rational& shift : shift_values(y)) {
            if (int rc = report(verify_binomial_type(seq, shift),
                                "binomial-type: " + name + " at y=" + shift.str())) {
                return rc;
            }
        }
    }
    return kExitOk;
}

OperatorSeries random_series(std::mt19937_64& rng, const SequenceSpec& spec, std::size_t order,
                             bool invertible) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> cs(order + 1);
    for (Rational& c : cs) c = Rational(BigInt(num(rng)), BigInt(den(rng)));
    if (invertible) {
        while (cs[0].is_zero()) cs[0] = Rational(BigInt(num(rng)), BigInt(den(rng)));
    }
    return OperatorSeries(spec, std::move(cs));
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t degree) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> cs(degree + 1);
    for (Rational& c : cs) c = Rational(BigInt(num(rng)), BigInt(den(rng)));
    while (cs.back().is_zero()) cs.back() = Rational(BigInt(num(rng)), BigInt(den(rng)));
    return Polynomial(std::move(cs));
}

Verification check_first_expansion(const OperatorSeries& T, const DeltaOperator& Q,
                                   const PolySequence& basic) {
    const OperatorSeries rebuilt = assemble_expansion(Q, expand_operator(T, Q, basic));
    for (std::size_t j = 0; j <= basic.max_index(); ++j) {
        const Polynomial monomial = Polynomial::monomial(Rational(1), j);
        if (apply(rebuilt, monomial) != apply(T, monomial)) {
            return Verification::fail(static_cast<int>(j), "first expansion reconstruction");
        }
    }
    return Verification::pass();
}

int suite_expansion(const SequenceSpec& spec, std::size_t N, const Rational& y) {
    const std::size_t order = N + 2;
    std::mt19937_64 rng(42);

    const DeltaOperator d = f_derivative(spec, order);
    const PolySequence monomials = basic_sequence(d, N, "monomials");
    const DeltaOperator delta = forward_difference(spec, order);
    const PolySequence delta_basic = basic_sequence(delta, N, "delta-f");

    const std::vector<std::pair<std::string, OperatorSeries>> samples = {
        {"translation", translation(spec, y, order)},
        {"forward difference", delta.series()},
        {"random series", random_series(rng, spec, order, false)},
    };
    for (const auto& [name, T] : samples) {
        if (int rc = report(check_first_expansion(T, d, monomials),
                            "first expansion of " + name + " in powers of partial-f")) {
            return rc;
        }
        if (int rc = report(check_first_expansion(T, delta, delta_basic),
                            "first expansion of " + name + " in powers of delta-f")) {
            return rc;
        }
    }

    const ShefferFamily bern = bernoulli_family(spec, N);
    if (int rc = report(verify_s_inverse_expansion(bern.seq, bern.Q, bern.S),
                        "S^{-1} expansion for bernoulli")) {
        return rc;
    }
    const ShefferFamily herm = hermite_family(spec, Rational(2), N);
    if (int rc = report(verify_s_inverse_expansion(herm.seq, herm.Q, herm.S),
                        "S^{-1} expansion for hermite a=2")) {
        return rc;
    }

    if (int rc = report(verify_second_expansion(bern.Q, bern.S, bern.seq,
                                                Polynomial::monomial(Rational(1), 4), y),
                        "second expansion: bernoulli, p=x^4")) {
        return rc;
    }
    const PolySequence delta_sheffer = sheffer_from_S(
        delta, OperatorSeries::identity(spec, order), N, "delta-f basic");
    if (int rc = report(verify_second_expansion(delta, OperatorSeries::identity(spec, order),
                                                delta_sheffer,
                                                random_polynomial(rng, std::min<std::size_t>(N, 6)),
                                                Rational(BigInt(-2), BigInt(3))),
                        "second expansion: delta-f, random p")) {
        return rc;
    }
    return kExitOk;
}

int suite_gf(const SequenceSpec& spec, std::size_t N, const Rational& a) {
    const std::size_t gf_n = std::min<std::size_t>(N, 6);
    const std::size_t order = gf_n + 2;
    const std::vector<std::pair<std::string, DeltaOperator>> ops = {
        {"partial-f", f_derivative(spec, order)},
        {"delta-f", forward_difference(spec, order)},
        {"nabla-f", backward_difference(spec, order)},
        {"abel", abel_op(spec, a, order)},
        {"laguerre", laguerre_op(spec, order)},
    };
    for (const auto& [name, op] : ops) {
        if (int rc = report(verify_gf(basic_sequence(op, gf_n, name), op),
                            "generating function: " + name)) {
            return rc;
        }
    }
    const ShefferFamily bern = bernoulli_family(spec, gf_n);
    if (int rc = report(verify_sheffer_gf(bern.seq, bern.Q, bern.S),
                        "Sheffer generating function: bernoulli")) {
        return rc;
    }
    const ShefferFamily herm = hermite_family(spec, a, gf_n);
    if (int rc = report(verify_sheffer_gf(herm.seq, herm.Q, herm.S),
                        "Sheffer generating function: hermite a=" + a.str())) {
        return rc;
    }
    return kExitOk;
}

int suite_sheffer_binomial(const SequenceSpec& spec, std::size_t N, const Rational& a,
                           const Rational& y) {
    const std::size_t order = N + 2;
    const PolySequence monomials = basic_sequence(f_derivative(spec, order), N, "monomials");

    const ShefferFamily bern = bernoulli_family(spec, N);
    if (int rc = report(verify_sheffer_binomial(bern.seq, monomials, y),
                        "Sheffer binomial: bernoulli vs monomials")) {
        return rc;
    }
    const ShefferFamily herm = hermite_family(spec, a, N);
    if (int rc = report(verify_sheffer_binomial(herm.seq, monomials, y),
                        "Sheffer binomial: hermite vs monomials")) {
        return rc;
    }
    const ShefferFamily lag = laguerre_family(spec, 1, N);
    const PolySequence lag_basic = basic_sequence(lag.Q, N, "laguerre");
    if (int rc = report(verify_sheffer_binomial(lag.seq, lag_basic, y),
                        "Sheffer binomial: laguerre alpha=1 vs laguerre basic")) {
        return rc;
    }
    return kExitOk;
}

int suite_second_expansion(const SequenceSpec& spec, std::size_t N, const Rational& y) {
    const std::size_t order = N + 2;
    std::mt19937_64 rng(7);
    const ShefferFamily bern = bernoulli_family(spec, N);
    if (int rc = report(verify_second_expansion(bern.Q, bern.S, bern.seq,
                                                Polynomial::monomial(Rational(1), 4), y),
                        "second expansion: bernoulli, p=x^4")) {
        return rc;
    }
    const DeltaOperator delta = forward_difference(spec, order);
    const PolySequence delta_sheffer =
        sheffer_from_S(delta, OperatorSeries::identity(spec, order), N, "delta-f basic");
    for (int trial = 0; trial < 3; ++trial) {
        if (int rc = report(
                verify_second_expansion(delta, OperatorSeries::identity(spec, order),
                                        delta_sheffer,
                                        random_polynomial(rng, std::min<std::size_t>(N, 6)), y),
                "second expansion: delta-f, random p #" + std::to_string(trial))) {
            return rc;
        }
    }
    return kExitOk;
}

int suite_transfer(const SequenceSpec& spec, std::size_t N, const Rational& a) {
    const std::size_t n_max = std::min<std::size_t>(N, 6);
    const std::size_t order = n_max + 2;
    const DeltaOperator source = f_derivative(spec, order);
    const PolySequence monomials = basic_sequence(source, n_max, "monomials");
    const std::vector<std::pair<std::string, DeltaOperator>> targets = {
        {"delta-f", forward_difference(spec, order)},
        {"abel", abel_op(spec, a, order)},
        {"laguerre", laguerre_op(spec, order)},
    };
    for (const auto& [name, target] : targets) {
        const PolySequence direct = basic_sequence(target, n_max, name);
        for (std::size_t n = 0; n <= n_max; ++n) {
            if (umbral_transfer_expansion(target, source, monomials, n) != direct.at(n)) {
                std::cerr << "FAIL: transfer (expansion route) to " << name << " at n=" << n
                          << "\n";
                return kExitVerifyFailure;
            }
            if (n >= 1 &&
                umbral_transfer_conjugation(target, source, monomials, n) != direct.at(n)) {
                std::cerr << "FAIL: transfer (conjugation route) to " << name << " at n=" << n
                          << "\n";
                return kExitVerifyFailure;
            }
        }
        std::cout << "ok: transfer to " << name << " matches direct generation (n <= " << n_max
                  << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const CommonOptions& opts, const std::string& suite, std::size_t max_degree,
               const std::string& a_text, const std::string& y_text) {
    const SequenceSpec spec = resolve_spec(opts);
    const Rational a = Rational::parse(a_text);
    const Rational y = Rational::parse(y_text);
    int rc = kExitUsage;
    if (suite == "binomial-type") {
        rc = suite_binomial_type(spec, max_degree, a, y);
    } else if (suite == "expansion") {
        rc = suite_expansion(spec, max_degree, y);
    } else if (suite == "gf") {
        rc = suite_gf(spec, max_degree, a);
    } else if (suite == "sheffer-binomial") {
        rc = suite_sheffer_binomial(spec, max_degree, a, y);
    } else if (suite == "second-expansion") {
        rc = suite_second_expansion(spec, max_degree, y);
    } else if (suite == "transfer") {
        rc = suite_transfer(spec, max_degree, a);
    } else {
        throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
    }
    if (rc == kExitOk) std::cout << "all checks passed\n";
    return rc;
}

int cmd_cobweb(const CommonOptions& opts, std::size_t max_level, bool do_dot, bool do_realizer,
               bool do_admissible) {
    const SequenceSpec spec = resolve_spec(opts);
    const CobwebPoset poset(spec, max_level);
    if (do_dot) {
        std::cout << export_dot(poset);
        return kExitOk;
    }
    if (do_realizer) {
        if (!verify_realizer(poset)) {
            std::cerr << "FAIL: chains X and Y do not realize the partial order\n";
            return kExitVerifyFailure;
        }
        std::cout << "realizer OK (" << poset.vertex_count() << " vertices)\n";
        return kExitOk;
    }
    if (do_admissible) {
        if (!is_regular(poset)) {
            std::cerr << "FAIL: poset digraph is not regular\n";
            return kExitVerifyFailure;
        }
        for (const char* name : {"X", "Y"}) {
            const LinearChain chain =
                std::string(name) == "X" ? chain_x(poset) : chain_y(poset);
            if (!is_admissible(poset, chain)) {
                std::cerr << "FAIL: chain " << name << " is not in admissible form\n";
                return kExitVerifyFailure;
            }
        }
        std::cout << "admissible OK (chains X and Y, " << poset.vertex_count()
                  << " vertices)\n";
        return kExitOk;
    }
    if (opts.format == "structured") {
        json chains_x = json::array(), chains_y = json::array();
        for (const Vertex& v : chain_x(poset)) chains_x.push_back(json::array({v.j, v.s}));
        for (const Vertex& v : chain_y(poset)) chains_y.push_back(json::array({v.j, v.s}));
        json doc{{"command", "cobweb"},
                 {"levels", poset.level_sizes()},
                 {"chain_x", chains_x},
                 {"chain_y", chains_y}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "levels:";
        for (std::size_t size : poset.level_sizes()) std::cout << " " << size;
        std::cout << "\nvertices: " << poset.vertex_count() << "\nedges: " << poset.edge_count()
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fibonomial operator calculus and cobweb poset toolkit"};
    app.require_subcommand(1);

    CommonOptions common;

    auto add_common = [&common](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--sequence-file", common.sequence_file,
                        "custom base sequence, one non-negative integer per line");
        if (with_format) {
            cmd->add_option("--format", common.format, "output format")
                ->check(CLI::IsMember({"text", "structured"}));
        }
    };

    unsigned fib_n = 0, fib_k = 0;
    CLI::App* fib = app.add_subcommand("fibonomial", "evaluate a fibonomial coefficient");
    fib->add_option("--n", fib_n, "upper index")->required();
    fib->add_option("--k", fib_k, "lower index")->required();
    add_common(fib);

    std::string basic_op = "partial-f";
    std::string a_text = "1";
    std::size_t max_degree = 8;
    CLI::App* basic = app.add_subcommand("basic", "generate a basic polynomial sequence");
    basic->add_option("--op", basic_op, "delta operator")
        ->check(CLI::IsMember({"partial-f", "delta-f", "nabla-f", "abel", "laguerre"}))
        ->required();
    basic->add_option("--a", a_text, "Abel parameter as p/q or integer");
    basic->add_option("--max-degree", max_degree, "highest index to generate");
    add_common(basic);

    std::string family = "bernoulli";
    int alpha = 1;
    CLI::App* sheffer = app.add_subcommand("sheffer", "generate a Sheffer polynomial family");
    sheffer->add_option("--family", family, "family name")
        ->check(CLI::IsMember({"hermite", "laguerre-alpha", "bernoulli"}))
        ->required();
    sheffer->add_option("--a", a_text, "Hermite parameter as p/q or integer");
    sheffer->add_option("--alpha", alpha, "Laguerre order, integer >= -1");
    sheffer->add_option("--max-degree", max_degree, "highest index to generate");
    add_common(sheffer);

    std::string suite;
    std::string y_text = "1";
    CLI::App* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"binomial-type", "expansion", "gf", "sheffer-binomial",
                               "second-expansion", "transfer"}))
        ->required();
    verify->add_option("--max-degree", max_degree, "highest index to check");
    verify->add_option("--a", a_text, "Abel/Hermite parameter");
    verify->add_option("--y", y_text, "shift value as p/q or integer");
    add_common(verify, false);

    std::size_t max_level = 8;
    bool do_dot = false, do_realizer = false, do_admissible = false;
    CLI::App* cobweb = app.add_subcommand("cobweb", "build and check the cobweb poset");
    cobweb->add_option("--max-level", max_level, "highest level of the truncation");
    cobweb->add_flag("--export-dot", do_dot, "print the DOT rendering");
    cobweb->add_flag("--verify-realizer", do_realizer, "check P = X intersect Y");
    cobweb->add_flag("--check-admissible", do_admissible,
                     "check regularity and chain admissibility");
    add_common(cobweb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*fib) return cmd_fibonomial(common, fib_n, fib_k);
        if (*basic) return cmd_basic(common, basic_op, a_text, max_degree);
        if (*sheffer) return cmd_sheffer(common, family, a_text, alpha, max_degree);
        if (*verify) return cmd_verify(common, suite, max_degree, a_text, y_text);
        if (*cobweb) return cmd_cobweb(common, max_level, do_dot, do_realizer, do_admissible);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateSequenceError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputData;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputData;
    } catch (const std::runtime_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
