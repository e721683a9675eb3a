#include "isospec/quaternion.hpp"

#include "parse_util.hpp"

#include <array>
#include <ostream>

namespace isospec {

UnitQuaternion::UnitQuaternion(AlgScalar w, AlgScalar x, AlgScalar y, AlgScalar z)
    : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    const AlgScalar norm = w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_;
    if (!(norm == AlgScalar(1)))
        throw std::invalid_argument("UnitQuaternion: norm is " + norm.str() + ", expected 1");
}

int UnitQuaternion::order(int cap) const {
    UnitQuaternion p = *this;
    for (int n = 1; n <= cap; ++n) {
        if (p == one()) return n;
        p = p * *this;
    }
    throw size_limit_error("UnitQuaternion: order exceeds cap");
}

std::string UnitQuaternion::str() const {
    struct Comp {
        const AlgScalar& value;
        const char* unit;
    };
    const Comp comps[] = {{w_, ""}, {x_, "i"}, {y_, "j"}, {z_, "k"}};
    std::string out;
    for (const auto& [value, unit] : comps) {
        if (value.is_zero()) continue;
        // Multi-term coefficients are parenthesized so the sum re-parses
        // unambiguously.
        int terms = 0;
        terms += value.a() != 0;
        terms += value.b() != 0;
        terms += value.c() != 0;
        terms += value.d() != 0;
        std::string text = value.str();
        bool negated = false;
        if (terms == 1 && text[0] == '-') {
            negated = true;
            text = text.substr(1);
        }
        if (unit[0] != '\0') {
            if (terms > 1) {
                text = "(" + text + ")*" + unit;
            } else if (text == "1") {
                text = unit;
            } else {
                text += std::string("*") + unit;
            }
        } else if (terms > 1) {
            text = "(" + text + ")";
        }
        if (out.empty()) {
            if (negated) out += "-";
        } else {
            out += negated ? "-" : "+";
        }
        out += text;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q) {
    return os << q.str();
}

namespace {

struct RawQuat {
    AlgScalar w, x, y, z;

    RawQuat operator*(const RawQuat& q) const {
        return {w * q.w - x * q.x - y * q.y - z * q.z, w * q.x + x * q.w + y * q.z - z * q.y,
                w * q.y - x * q.z + y * q.w + z * q.x, w * q.z + x * q.y - y * q.x + z * q.w};
    }
    RawQuat operator+(const RawQuat& q) const { return {w + q.w, x + q.x, y + q.y, z + q.z}; }
    RawQuat operator-() const { return {-w, -x, -y, -z}; }
};

// qfactor := '(' algscalar ')' | rational | sqrt(..) | 'i' | 'j' | 'k'
RawQuat parse_qfactor(detail::Cursor& cur) {
    if (cur.accept('(')) {
        AlgScalar s = detail::parse_algscalar_expr(cur);
        cur.expect(')');
        return {s, AlgScalar(), AlgScalar(), AlgScalar()};
    }
    if (cur.accept_word("i")) return {AlgScalar(), AlgScalar(1), AlgScalar(), AlgScalar()};
    if (cur.accept_word("j")) return {AlgScalar(), AlgScalar(), AlgScalar(1), AlgScalar()};
    if (cur.accept_word("k")) return {AlgScalar(), AlgScalar(), AlgScalar(), AlgScalar(1)};
    if (cur.accept_word("sqrt")) {
        cur.expect('(');
        Int rad = cur.parse_uint();
        cur.expect(')');
        AlgScalar s;
        if (rad == 2) s = AlgScalar::sqrt2();
        else if (rad == 5) s = AlgScalar::sqrt5();
        else if (rad == 10) s = AlgScalar::sqrt10();
        else if (rad == 1) s = AlgScalar(1);
        else cur.fail("sqrt radicand must be one of 1, 2, 5, 10");
        return {s, AlgScalar(), AlgScalar(), AlgScalar()};
    }
    return {AlgScalar(cur.parse_urational()), AlgScalar(), AlgScalar(), AlgScalar()};
}

}  // namespace

UnitQuaternion parse_quaternion(const std::string& text) {
    detail::Cursor cur(text);
    RawQuat total{AlgScalar(), AlgScalar(), AlgScalar(), AlgScalar()};
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (cur.accept('-')) sign = -1;
        } else if (cur.accept('+')) {
            sign = 1;
        } else if (cur.accept('-')) {
            sign = -1;
        } else {
            break;
        }
        RawQuat term = parse_qfactor(cur);
        while (cur.accept('*')) term = term * parse_qfactor(cur);
        total = total + (sign < 0 ? -term : term);
        first = false;
    }
    if (first) cur.fail("empty quaternion");
    if (!cur.eof()) cur.fail("trailing input");
    return {total.w, total.x, total.y, total.z};
}

}  // namespace isospec
