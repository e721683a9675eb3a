#pragma once

#include "isospec/numeric.hpp"

#include <array>
#include <compare>
#include <iosfwd>
#include <string>

namespace isospec {

// Element of the real quartic field Q(sqrt2, sqrt5), stored on the basis
// {1, sqrt2, sqrt5, sqrt10} as a + b*sqrt2 + c*sqrt5 + d*sqrt10.
// Closed under +,-,*; nonzero elements are invertible (Galois-conjugate norm).
class AlgScalar {
  public:
    AlgScalar() = default;
    AlgScalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    AlgScalar(int v) : a_(v) {}                  // NOLINT: implicit by design
    AlgScalar(Rational v) : a_(std::move(v)) {}  // NOLINT: implicit by design

    static AlgScalar sqrt2() { return {0, 1, 0, 0}; }
    static AlgScalar sqrt5() { return {0, 0, 1, 0}; }
    static AlgScalar sqrt10() { return {0, 0, 0, 1}; }
    // 1/sqrt2 = sqrt2/2 and the golden ratio phi = (1+sqrt5)/2 are exact.
    static AlgScalar inv_sqrt2() { return {0, Rational(1, 2), 0, 0}; }
    static AlgScalar golden() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
    static AlgScalar golden_inv() { return {Rational(-1, 2), 0, Rational(1, 2), 0}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

    friend AlgScalar operator+(const AlgScalar& x, const AlgScalar& y) {
        return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
    }
    friend AlgScalar operator-(const AlgScalar& x, const AlgScalar& y) {
        return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
    }
    AlgScalar operator-() const { return {-a_, -b_, -c_, -d_}; }

    // Exact product using sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5,
    // sqrt5*sqrt10 = 5*sqrt2. Zero components are skipped: group elements
    // are sparse on this basis and full 16-product expansion dominates the
    // closure-heavy call sites otherwise.
    friend AlgScalar operator*(const AlgScalar& x, const AlgScalar& y) {
        struct Cell {
            int index;
            int scale;
        };
        static constexpr Cell kTable[4][4] = {
            {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
            {{1, 1}, {0, 2}, {3, 1}, {2, 2}},
            {{2, 1}, {3, 1}, {0, 5}, {1, 5}},
            {{3, 1}, {2, 2}, {1, 5}, {0, 10}},
        };
        const Rational* xs[4] = {&x.a_, &x.b_, &x.c_, &x.d_};
        const Rational* ys[4] = {&y.a_, &y.b_, &y.c_, &y.d_};
        Rational comps[4];
        for (int i = 0; i < 4; ++i) {
            if (xs[i]->is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (ys[j]->is_zero()) continue;
                const Cell cell = kTable[i][j];
                Rational prod = *xs[i] * *ys[j];
                if (cell.scale != 1) prod *= cell.scale;
                comps[cell.index] += prod;
            }
        }
        return {std::move(comps[0]), std::move(comps[1]), std::move(comps[2]),
                std::move(comps[3])};
    }

    AlgScalar& operator+=(const AlgScalar& y) { return *this = *this + y; }
    AlgScalar& operator-=(const AlgScalar& y) { return *this = *this - y; }
    AlgScalar& operator*=(const AlgScalar& y) { return *this = *this * y; }

    // Galois conjugations: flip the sign of sqrt2 resp. sqrt5.
    AlgScalar conj_sqrt2() const { return {a_, -b_, c_, -d_}; }
    AlgScalar conj_sqrt5() const { return {a_, b_, -c_, -d_}; }

    AlgScalar inverse() const;

    bool operator==(const AlgScalar& y) const = default;

    // Component-wise lexicographic order: a fixed total order used for
    // canonical representatives and set storage (not the numeric order).
    std::strong_ordering operator<=>(const AlgScalar& y) const {
        if (auto c = a_.compare(y.a_); c != 0) return c <=> 0;
        if (auto c = b_.compare(y.b_); c != 0) return c <=> 0;
        if (auto c = c_.compare(y.c_); c != 0) return c <=> 0;
        return d_.compare(y.d_) <=> 0;
    }

    // Exact sign of the real number a + b*sqrt2 + c*sqrt5 + d*sqrt10.
    int sign() const;
    // Numeric comparison (sign of *this - y).
    int compare_numeric(const AlgScalar& y) const { return (*this - y).sign(); }

    std::string str() const;

  private:
    Rational a_, b_, c_, d_;
};

AlgScalar parse_algscalar(const std::string& text);
std::ostream& operator<<(std::ostream& os, const AlgScalar& x);

}  // namespace isospec
