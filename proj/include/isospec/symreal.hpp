#pragma once

#include "isospec/numeric.hpp"

#include <iosfwd>
#include <string>

namespace isospec {

// Exact value q * sqrt(d) with q rational and d a squarefree positive integer.
// d == 1 exactly when the value is rational; q == 0 forces d == 1, so the
// representation is canonical and equality is component-wise.
class SymReal {
  public:
    SymReal() : q_(0), d_(1) {}
    SymReal(Rational q) : q_(std::move(q)), d_(1) {}  // NOLINT: implicit by design
    SymReal(int q) : q_(q), d_(1) {}                  // NOLINT: implicit by design
    SymReal(Rational q, Int d);

    const Rational& q() const { return q_; }
    const Int& d() const { return d_; }
    bool is_zero() const { return q_ == 0; }
    bool is_rational() const { return d_ == 1; }

    friend SymReal operator*(const SymReal& x, const SymReal& y);
    friend SymReal operator/(const SymReal& x, const SymReal& y);
    SymReal operator-() const { return {-q_, d_, canonical_tag{}}; }

    // sqrt(q) for rational q >= 0, as a SymReal (throws on negative input or
    // when this value itself is irrational).
    SymReal sqrt() const;

    bool operator==(const SymReal& y) const = default;

    std::string str() const;

  private:
    struct canonical_tag {};
    SymReal(Rational q, Int d, canonical_tag) : q_(std::move(q)), d_(std::move(d)) {}

    Rational q_;
    Int d_;
};

// Exact value r * pi^a.
class SymVolume {
  public:
    SymVolume() : r_(0), a_(0) {}
    SymVolume(SymReal r, unsigned a) : r_(std::move(r)), a_(r_.is_zero() ? 0 : a) {}

    const SymReal& radical() const { return r_; }
    unsigned pi_exponent() const { return a_; }

    friend SymVolume operator*(const SymVolume& x, const SymVolume& y) {
        return {x.r_ * y.r_, x.a_ + y.a_};
    }
    friend SymVolume operator/(const SymVolume& x, const SymVolume& y) {
        if (x.a_ < y.a_)
            throw unsupported_form_error("SymVolume: quotient has negative pi exponent");
        return {x.r_ / y.r_, x.a_ - y.a_};
    }
    SymVolume operator*(const Rational& s) const { return {r_ * SymReal(s), a_}; }

    // Volume rescaling under a metric scaling g -> s*g on a dim-dimensional
    // space: vol -> s^(dim/2) * vol.
    SymVolume rescale_metric(const Rational& s, unsigned dim) const;

    bool operator==(const SymVolume& y) const = default;

    std::string str() const;
    // Equivalent display with the radical moved to the denominator:
    // q*sqrt(d)*pi^a = (q*d)*pi^a/sqrt(d), e.g. 32/243*pi^4*sqrt(3) prints
    // as 32/81*pi^4/sqrt(3).
    std::string str_sqrt_denominator() const;

  private:
    SymReal r_;
    unsigned a_;
};

SymReal parse_symreal(const std::string& text);
SymVolume parse_symvolume(const std::string& text);

std::ostream& operator<<(std::ostream& os, const SymReal& x);
std::ostream& operator<<(std::ostream& os, const SymVolume& x);

}  // namespace isospec
