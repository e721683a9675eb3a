#pragma once

#include "isospec/algscalar.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace isospec {

// Exact unit quaternion w + x*i + y*j + z*k over Q(sqrt2, sqrt5); the norm
// w^2+x^2+y^2+z^2 = 1 is checked at construction. Conjugacy in SU(2) is
// determined by the real part w.
class UnitQuaternion {
  public:
    UnitQuaternion() : w_(1) {}
    UnitQuaternion(AlgScalar w, AlgScalar x, AlgScalar y, AlgScalar z);

    static UnitQuaternion one() { return {}; }
    static UnitQuaternion i() { return {0, 1, 0, 0}; }
    static UnitQuaternion j() { return {0, 0, 1, 0}; }
    static UnitQuaternion k() { return {0, 0, 0, 1}; }

    const AlgScalar& w() const { return w_; }
    const AlgScalar& x() const { return x_; }
    const AlgScalar& y() const { return y_; }
    const AlgScalar& z() const { return z_; }
    const AlgScalar& real_part() const { return w_; }

    friend UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
        return UnitQuaternion(checked_tag{},
                              p.w_ * q.w_ - p.x_ * q.x_ - p.y_ * q.y_ - p.z_ * q.z_,
                              p.w_ * q.x_ + p.x_ * q.w_ + p.y_ * q.z_ - p.z_ * q.y_,
                              p.w_ * q.y_ - p.x_ * q.z_ + p.y_ * q.w_ + p.z_ * q.x_,
                              p.w_ * q.z_ + p.x_ * q.y_ - p.y_ * q.x_ + p.z_ * q.w_);
    }

    UnitQuaternion conjugate() const { return UnitQuaternion(checked_tag{}, w_, -x_, -y_, -z_); }
    UnitQuaternion inverse() const { return conjugate(); }
    UnitQuaternion operator-() const { return UnitQuaternion(checked_tag{}, -w_, -x_, -y_, -z_); }

    UnitQuaternion conjugated_by(const UnitQuaternion& g) const {
        return g * *this * g.inverse();
    }

    int order(int cap = 1000) const;

    bool operator==(const UnitQuaternion& q) const = default;
    std::strong_ordering operator<=>(const UnitQuaternion& q) const = default;

    std::string str() const;

  private:
    struct checked_tag {};
    UnitQuaternion(checked_tag, AlgScalar w, AlgScalar x, AlgScalar y, AlgScalar z)
        : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

    AlgScalar w_, x_, y_, z_;
};

UnitQuaternion parse_quaternion(const std::string& text);
std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q);

}  // namespace isospec
