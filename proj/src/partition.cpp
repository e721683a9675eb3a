#include "isospec/partition.hpp"

#include "parse_util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace isospec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        m_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int col = 1; col <= (parts_.empty() ? 0 : parts_[0]); ++col) {
        int h = 0;
        for (int part : parts_)
            if (part >= col) ++h;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

Partition parse_partition(const std::string& text) {
    detail::Cursor cur(text);
    const bool parens = cur.accept('(');
    std::vector<int> parts;
    if (!(parens && cur.accept(')'))) {
        do {
            parts.push_back(static_cast<int>(cur.parse_uint()));
        } while (cur.accept(','));
        if (parens) cur.expect(')');
    }
    if (!cur.eof()) cur.fail("trailing input");
    return Partition(std::move(parts));
}

CycleType CycleType::identity(int m) {
    return CycleType(Partition(std::vector<int>(static_cast<size_t>(m), 1)));
}

bool CycleType::is_identity() const {
    return p_.empty() || p_[0] == 1;
}

int CycleType::parity() const {
    int s = 0;
    for (int c : p_.parts()) s += c - 1;
    return s % 2;
}

long long CycleType::order() const {
    long long o = 1;
    for (int c : p_.parts()) o = std::lcm(o, static_cast<long long>(c));
    return o;
}

Int CycleType::class_size() const {
    std::map<int, int> mult;
    for (int c : p_.parts()) ++mult[c];
    Int z = 1;
    for (auto [len, count] : mult) z *= int_pow(len, static_cast<unsigned>(count)) * factorial(static_cast<unsigned>(count));
    return factorial(static_cast<unsigned>(p_.m())) / z;
}

std::vector<Partition> enumerate_partitions(int m, int cap) {
    if (m < 1) throw std::invalid_argument("enumerate_partitions: m must be positive");
    if (m > cap) throw size_limit_error("enumerate_partitions: m exceeds cap " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    // Reverse-lexicographic generation: always place the largest part allowed.
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int first = std::min(remaining, maxpart); first >= 1; --first) {
            cur.push_back(first);
            self(self, remaining - first, first);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

Int partition_count(int m) {
    if (m < 0) return 0;
    std::vector<Int> p(static_cast<size_t>(m) + 1);
    p[0] = 1;
    for (int n = 1; n <= m; ++n) {
        Int total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const Int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) total += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) total += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = total;
    }
    return p[static_cast<size_t>(m)];
}

CycleType power_cycle_type(const CycleType& mu, long long k) {
    if (k < 0) throw std::invalid_argument("power_cycle_type: exponent must be non-negative");
    if (k == 0) return CycleType::identity(mu.m());
    std::vector<int> out;
    for (int c : mu.partition().parts()) {
        const long long g = std::gcd(static_cast<long long>(c), k);
        for (long long i = 0; i < g; ++i) out.push_back(static_cast<int>(c / g));
    }
    std::sort(out.begin(), out.end(), std::greater<int>());
    return CycleType(Partition(std::move(out)));
}

}  // namespace isospec
