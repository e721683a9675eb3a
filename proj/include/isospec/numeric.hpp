#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace isospec {

using Int = boost::multiprecision::cpp_int;
// Always in lowest terms with positive denominator; cpp_rational maintains
// both invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

// Raised when a closure/enumeration would exceed its configured cap.
class size_limit_error : public std::runtime_error {
  public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a value cannot be represented in the supported symbolic forms.
class unsupported_form_error : public std::runtime_error {
  public:
    explicit unsupported_form_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int int_pow(Int base, unsigned exp) {
    Int out = 1;
    while (exp > 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
    return Rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

inline Int factorial(unsigned n) {
    Int out = 1;
    for (unsigned k = 2; k <= n; ++k) out *= k;
    return out;
}

// Splits n > 0 as s^2 * f with f squarefree; returns {s, f}.
inline std::pair<Int, Int> squarefree_split(Int n) {
    if (n <= 0) throw std::invalid_argument("squarefree_split: argument must be positive");
    Int square = 1, free = 1;
    for (Int p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (unsigned k = 0; k + 1 < e; k += 2) square *= p;
        if (e % 2 == 1) free *= p;
    }
    free *= n;
    return {square, free};
}

inline std::string render_rational(const Rational& q) {
    std::string out = numerator(q).str();
    if (denominator(q) != 1) out += "/" + denominator(q).str();
    return out;
}

}  // namespace isospec
