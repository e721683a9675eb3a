#include "isospec/symreal.hpp"

#include "parse_util.hpp"

#include <ostream>

namespace isospec {

SymReal::SymReal(Rational q, Int d) : q_(std::move(q)), d_(std::move(d)) {
    if (d_ <= 0) throw std::invalid_argument("SymReal: radicand must be positive");
    if (q_ == 0) {
        d_ = 1;
        return;
    }
    auto [square, free] = squarefree_split(d_);
    q_ *= square;
    d_ = free;
}

SymReal operator*(const SymReal& x, const SymReal& y) {
    return SymReal(x.q_ * y.q_, x.d_ * y.d_);
}

SymReal operator/(const SymReal& x, const SymReal& y) {
    if (y.is_zero()) throw std::domain_error("SymReal: division by zero");
    return SymReal(x.q_ / (y.q_ * y.d_), x.d_ * y.d_);
}

SymReal SymReal::sqrt() const {
    if (!is_rational()) throw unsupported_form_error("SymReal: sqrt of irrational value");
    if (q_ < 0) throw std::domain_error("SymReal: sqrt of negative value");
    if (q_ == 0) return SymReal(0);
    // sqrt(p/r) = sqrt(p*r)/r
    return SymReal(Rational(1, denominator(q_)), numerator(q_) * denominator(q_));
}

std::string SymReal::str() const {
    if (d_ == 1) return render_rational(q_);
    std::string radical = "sqrt(" + d_.str() + ")";
    if (q_ == 1) return radical;
    if (q_ == -1) return "-" + radical;
    return render_rational(q_) + "*" + radical;
}

SymVolume SymVolume::rescale_metric(const Rational& s, unsigned dim) const {
    if (s <= 0) throw std::domain_error("SymVolume: metric scale must be positive");
    SymReal factor = rational_pow(s, dim / 2);
    if (dim % 2 == 1) factor = factor * SymReal(s).sqrt();
    return {r_ * factor, a_};
}

std::string SymVolume::str() const {
    std::string pieces;
    if (a_ > 0) {
        pieces = "pi";
        if (a_ > 1) pieces += "^" + std::to_string(a_);
    }
    if (r_.d() != 1) {
        if (!pieces.empty()) pieces += "*";
        pieces += "sqrt(" + r_.d().str() + ")";
    }
    if (pieces.empty()) return render_rational(r_.q());
    if (r_.q() == 1) return pieces;
    if (r_.q() == -1) return "-" + pieces;
    return render_rational(r_.q()) + "*" + pieces;
}

std::string SymVolume::str_sqrt_denominator() const {
    if (r_.d() == 1) return str();
    const Rational q = r_.q() * r_.d();
    std::string out;
    if (q == 1) {
        // empty numeric prefix
    } else if (q == -1) {
        out = "-";
    } else {
        out = render_rational(q);
    }
    if (a_ > 0) {
        if (!out.empty() && out != "-") out += "*";
        out += "pi";
        if (a_ > 1) out += "^" + std::to_string(a_);
    }
    if (out.empty() || out == "-") out += "1";
    return out + "/sqrt(" + r_.d().str() + ")";
}

std::ostream& operator<<(std::ostream& os, const SymReal& x) {
    return os << x.str();
}
std::ostream& operator<<(std::ostream& os, const SymVolume& x) {
    return os << x.str();
}

namespace {

struct VolumeParts {
    Rational q = 1;
    Int d = 1;
    unsigned a = 0;
};

VolumeParts parse_parts(const std::string& text, bool allow_pi) {
    detail::Cursor cur(text);
    VolumeParts out;
    int sign = cur.accept('-') ? -1 : 1;
    bool first = true;
    while (first || cur.accept('*')) {
        first = false;
        if (cur.accept_word("pi")) {
            if (!allow_pi) cur.fail("pi factor not allowed here");
            unsigned e = 1;
            if (cur.accept('^')) e = static_cast<unsigned>(cur.parse_uint());
            out.a += e;
        } else if (cur.accept_word("sqrt")) {
            cur.expect('(');
            out.d *= cur.parse_uint();
            cur.expect(')');
        } else {
            out.q *= cur.parse_urational();
        }
    }
    // trailing divisors: .../sqrt(3), pi^3/2
    while (cur.accept('/')) {
        if (cur.accept_word("sqrt")) {
            cur.expect('(');
            const Int e = cur.parse_uint();
            cur.expect(')');
            if (e == 0) cur.fail("division by sqrt(0)");
            out.q /= e;
            out.d *= e;
        } else {
            const Rational divisor = cur.parse_urational();
            if (divisor == 0) cur.fail("division by zero");
            out.q /= divisor;
        }
    }
    if (!cur.eof()) cur.fail("trailing input");
    out.q *= sign;
    return out;
}

}  // namespace

SymReal parse_symreal(const std::string& text) {
    VolumeParts p = parse_parts(text, /*allow_pi=*/false);
    return SymReal(p.q, p.d);
}

SymVolume parse_symvolume(const std::string& text) {
    VolumeParts p = parse_parts(text, /*allow_pi=*/true);
    return {SymReal(p.q, p.d), p.a};
}

}  // namespace isospec
