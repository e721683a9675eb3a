#pragma once

#include "isospec/numeric.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace isospec::detail {

// Minimal cursor over a text expression; shared by the scalar/quaternion parsers.
struct Cursor {
    const std::string& text;
    size_t pos = 0;

    explicit Cursor(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + " in \"" +
                                    text + "\": " + msg);
    }

    Int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(text.substr(start, pos - start));
    }

    // unsigned rational: digits [ '/' digits ]; the '/' is consumed only when
    // a digit follows, so "2/sqrt(2)" leaves the divisor to the caller
    Rational parse_urational() {
        Int num = parse_uint();
        const size_t mark = pos;
        if (accept('/')) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                Int den = parse_uint();
                if (den == 0) fail("zero denominator");
                return Rational(num, den);
            }
            pos = mark;
        }
        return Rational(num);
    }
};

}  // namespace isospec::detail

namespace isospec {
class AlgScalar;
namespace detail {
// Defined in algscalar.cpp; shared with the quaternion parser.
AlgScalar parse_algscalar_expr(Cursor& cur);
}  // namespace detail
}  // namespace isospec
