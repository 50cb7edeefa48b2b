#include "fibcalc/sequence.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fibcalc/errors.hpp"

namespace fibcalc {

namespace {

// Shared Fibonacci cache; guarded so concurrent readers see a consistent table.
const BigInt& fibonacci_term(std::size_t n) {
    static std::mutex mutex;
    static std::vector<BigInt> cache = {BigInt(0), BigInt(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) {
        cache.push_back(cache[cache.size() - 1] + cache[cache.size() - 2]);
    }
    return cache[n];
}

}  // namespace

SequenceSpec SequenceSpec::custom(std::vector<BigInt> values) {
    for (const BigInt& v : values) {
        if (v < 0) {
            throw std::invalid_argument("custom sequence terms must be non-negative");
        }
    }
    return SequenceSpec(std::move(values));
}

SequenceSpec SequenceSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open sequence file: " + path);
    }
    std::vector<BigInt> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Tolerate surrounding whitespace and empty lines.
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);
        BigInt v;
        if (v.set_str(token, 10) != 0 || v < 0) {
            std::ostringstream msg;
            msg << path << ":" << lineno << ": expected a non-negative integer, got '" << token
                << "'";
            throw std::runtime_error(msg.str());
        }
        values.push_back(std::move(v));
    }
    return custom(std::move(values));
}

BigInt term(const SequenceSpec& spec, std::size_t n) {
    if (spec.kind() == SequenceSpec::Kind::Fibonacci) {
        return fibonacci_term(n);
    }
    if (n >= spec.values().size()) {
        std::ostringstream msg;
        msg << "custom sequence has " << spec.values().size() << " terms, index " << n
            << " requested";
        throw std::out_of_range(msg.str());
    }
    return spec.values()[n];
}

BigInt f_factorial(const SequenceSpec& spec, std::size_t n) {
    BigInt product(1);
    for (std::size_t i = 1; i <= n; ++i) {
        const BigInt t = term(spec, i);
        if (t == 0) {
            std::ostringstream msg;
            msg << "degenerate sequence: term " << i << " is zero inside a factorial";
            throw DegenerateSequenceError(msg.str());
        }
        product *= t;
    }
    return product;
}

BigInt f_falling(const SequenceSpec& spec, std::size_t n, std::size_t k) {
    if (k > n) {
        std::ostringstream msg;
        msg << "falling factorial with k=" << k << " > n=" << n;
        throw std::domain_error(msg.str());
    }
    BigInt product(1);
    for (std::size_t i = 0; i < k; ++i) {
        product *= term(spec, n - i);
    }
    return product;
}

BigInt fibonomial(const SequenceSpec& spec, std::size_t n, std::size_t k) {
    if (k > n) {
        return BigInt(0);
    }
    const BigInt numerator = f_falling(spec, n, k);
    const BigInt denominator = f_factorial(spec, k);
    BigInt quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                denominator.get_mpz_t());
    if (remainder != 0) {
        std::ostringstream msg;
        msg << "fibonomial(" << n << "," << k << ") is not an integer for this sequence";
        throw std::domain_error(msg.str());
    }
    return quotient;
}

}  // namespace fibcalc
