#pragma once

#include "isospec/numeric.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isospec {

// Weakly decreasing positive integers; doubles as an irrep label and as the
// cycle type of a permutation of Sym(m), m = sum of the parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int m() const { return m_; }
    bool empty() const { return parts_.empty(); }
    size_t size() const { return parts_.size(); }
    int operator[](size_t i) const { return parts_[i]; }

    Partition conjugate() const;

    bool operator==(const Partition& y) const { return parts_ == y.parts_; }
    std::strong_ordering operator<=>(const Partition& y) const {
        if (auto c = m_ <=> y.m_; c != 0) return c;
        // Larger-first lexicographic comparison within fixed m, so that the
        // enumeration order (m) first, (1^m) last is the natural "<".
        if (parts_ == y.parts_) return std::strong_ordering::equal;
        return parts_ > y.parts_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::string str() const;  // "(4,1,1,1,1)"

  private:
    std::vector<int> parts_;
    int m_ = 0;
};

Partition parse_partition(const std::string& text);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// Cycle type of a permutation: a partition of m listing cycle lengths.
class CycleType {
  public:
    CycleType() = default;
    explicit CycleType(Partition p) : p_(std::move(p)) {}
    CycleType(std::initializer_list<int> parts) : p_(parts) {}

    const Partition& partition() const { return p_; }
    int m() const { return p_.m(); }

    static CycleType identity(int m);
    bool is_identity() const;

    // parity = sum of (part - 1) mod 2; 1 means odd permutation.
    int parity() const;
    bool is_odd() const { return parity() == 1; }

    // lcm of the parts = order of any permutation of this type.
    long long order() const;

    // m! / z_mu, z_mu = prod over distinct part sizes i of i^{a_i} a_i!.
    Int class_size() const;

    bool operator==(const CycleType& y) const = default;
    std::strong_ordering operator<=>(const CycleType& y) const = default;

  private:
    Partition p_;
};

// All partitions of m in reverse-lexicographic order ((m) first, (1^m) last);
// throws size_limit_error when m exceeds the cap.
std::vector<Partition> enumerate_partitions(int m, int cap = 64);

// Number of partitions of m via the Euler pentagonal-number recurrence.
Int partition_count(int m);

// Cycle type of z^k for any permutation z of cycle type mu: each cycle of
// length c splits into gcd(c,k) cycles of length c/gcd(c,k). k = 0 gives the
// identity type.
CycleType power_cycle_type(const CycleType& mu, long long k);

}  // namespace isospec
