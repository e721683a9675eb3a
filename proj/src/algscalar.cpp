#include "isospec/algscalar.hpp"

#include "parse_util.hpp"

#include <ostream>
#include <sstream>

namespace isospec {

namespace {

int sign_of(const Rational& q) {
    return q.compare(0);
}

// Sign of p + q*sqrt2 for rational p, q.
int sign_sqrt2(const Rational& p, const Rational& q) {
    const int sp = sign_of(p), sq = sign_of(q);
    if (sp == 0 && sq == 0) return 0;
    if (sp >= 0 && sq >= 0) return 1;
    if (sp <= 0 && sq <= 0) return -1;
    // Opposite strict signs; p^2 = 2q^2 is impossible for nonzero rationals.
    const int cmp = sign_of(p * p - 2 * q * q);
    return sp > 0 ? cmp : -cmp;
}

}  // namespace

int AlgScalar::sign() const {
    // View as A + B*sqrt5 with A = a + b*sqrt2, B = c + d*sqrt2 in Q(sqrt2).
    const int sA = sign_sqrt2(a_, b_);
    const int sB = sign_sqrt2(c_, d_);
    if (sA == 0 && sB == 0) return 0;
    if (sA >= 0 && sB >= 0) return 1;
    if (sA <= 0 && sB <= 0) return -1;
    // A^2 - 5B^2 lies again in Q(sqrt2).
    const Rational p = a_ * a_ + 2 * b_ * b_ - 5 * (c_ * c_ + 2 * d_ * d_);
    const Rational q = 2 * a_ * b_ - 10 * c_ * d_;
    const int t = sign_sqrt2(p, q);
    return sA > 0 ? t : -t;
}

AlgScalar AlgScalar::inverse() const {
    if (is_zero()) throw std::domain_error("AlgScalar: inverse of zero");
    const AlgScalar cofactor = conj_sqrt2() * conj_sqrt5() * conj_sqrt2().conj_sqrt5();
    const AlgScalar norm = *this * cofactor;
    // The full Galois norm is rational by construction.
    if (!norm.is_rational()) throw std::logic_error("AlgScalar: norm not rational");
    const Rational inv = Rational(1) / norm.a();
    return {cofactor.a() * inv, cofactor.b() * inv, cofactor.c() * inv, cofactor.d() * inv};
}

std::string AlgScalar::str() const {
    struct Term {
        const Rational& coeff;
        const char* radical;
    };
    const Term terms[] = {{a_, ""}, {b_, "sqrt(2)"}, {c_, "sqrt(5)"}, {d_, "sqrt(10)"}};
    std::string out;
    for (const auto& [coeff, radical] : terms) {
        if (coeff == 0) continue;
        const bool neg = coeff < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        const Rational mag = neg ? Rational(-coeff) : coeff;
        if (radical[0] == '\0') {
            out += render_rational(mag);
        } else {
            if (mag != 1) out += render_rational(mag) + "*";
            out += radical;
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const AlgScalar& x) {
    return os << x.str();
}

namespace {

// factor := rational | sqrt '(' uint ')'
AlgScalar parse_factor(detail::Cursor& cur) {
    if (cur.accept_word("sqrt")) {
        cur.expect('(');
        Int rad = cur.parse_uint();
        cur.expect(')');
        if (rad == 2) return AlgScalar::sqrt2();
        if (rad == 5) return AlgScalar::sqrt5();
        if (rad == 10) return AlgScalar::sqrt10();
        if (rad == 1) return AlgScalar(1);
        cur.fail("sqrt radicand must be one of 1, 2, 5, 10");
    }
    return AlgScalar(cur.parse_urational());
}

}  // namespace

namespace detail {

// expr := ['-'] term (('+'|'-') term)*, term := factor ('*' factor)*
AlgScalar parse_algscalar_expr(Cursor& cur) {
    AlgScalar total;
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (cur.accept('-')) sign = -1;
        } else {
            if (cur.accept('+')) {
                sign = 1;
            } else if (cur.accept('-')) {
                sign = -1;
            } else {
                break;
            }
        }
        AlgScalar term = parse_factor(cur);
        while (cur.accept('*')) term *= parse_factor(cur);
        total += sign < 0 ? -term : term;
        first = false;
    }
    if (first) cur.fail("empty expression");
    return total;
}

}  // namespace detail

AlgScalar parse_algscalar(const std::string& text) {
    detail::Cursor cur(text);
    AlgScalar out = detail::parse_algscalar_expr(cur);
    if (!cur.eof()) cur.fail("trailing input");
    return out;
}

}  // namespace isospec
