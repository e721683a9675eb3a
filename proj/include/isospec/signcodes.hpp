#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace isospec {

// Diagonal +-1 matrix acting on R^6, encoded as a length-6 binary vector
// (bit set <=> entry -1). The determinant is (-1)^weight, so membership in
// SO(6) is even weight; the O(6)-conjugacy class of an involution is its
// weight.
class SignVector {
  public:
    SignVector() = default;
    explicit SignVector(std::bitset<6> bits) : bits_(bits) {}
    // From entries +1/-1.
    static SignVector from_entries(const std::array<int, 6>& entries);

    const std::bitset<6>& bits() const { return bits_; }
    int weight() const { return static_cast<int>(bits_.count()); }
    int determinant() const { return weight() % 2 == 0 ? 1 : -1; }
    bool in_so6() const { return weight() % 2 == 0; }

    // Componentwise product of the diagonal matrices.
    friend SignVector operator*(const SignVector& x, const SignVector& y) {
        return SignVector(x.bits_ ^ y.bits_);
    }

    SignVector permuted(const std::array<int, 6>& perm) const;

    bool operator==(const SignVector& y) const = default;
    std::strong_ordering operator<=>(const SignVector& y) const {
        return bits_.to_ulong() <=> y.bits_.to_ulong();
    }

    std::string str() const;  // "(1,-1,...,1)"

  private:
    std::bitset<6> bits_;
};

// A linear binary code in Z2^6, viewed as a group of diagonal matrices.
class SignCodeGroup {
  public:
    static SignCodeGroup from_codewords(std::set<SignVector> codewords);

    const std::set<SignVector>& codewords() const { return codewords_; }
    size_t order() const { return codewords_.size(); }
    bool all_weights_even() const;

    std::map<int, int> weight_enumerator() const;

    SignCodeGroup permuted(const std::array<int, 6>& perm) const;

    bool operator==(const SignCodeGroup& y) const { return codewords_ == y.codewords_; }

  private:
    std::set<SignVector> codewords_;
};

// The two order-8 diagonal subgroups of SO(6) that are almost conjugate but
// not conjugate: the weight-2 supports of the first pairwise intersect
// ({12},{13},{23}) while those of the second are disjoint ({12},{34},{56}).
//
// Conjugacy in O(6) between two diagonal sign groups containing -Id reduces
// to coordinate-permutation equivalence of the codes: an orthogonal
// conjugator must permute the common coordinate eigenspace decomposition up
// to signs, and sign changes act trivially on diagonal sign groups. That
// reduction is what makes non-conjugacy decidable by the 720-permutation
// scan below. The preimages in Spin(6) and Pin(6) inherit the
// almost-conjugate/non-conjugate dichotomy from the SO(6)/O(6) facts; no
// Clifford-algebra computation is performed here.
std::pair<SignCodeGroup, SignCodeGroup> so6_counterexample_pair();

// True iff the weight enumerators coincide (the SO(6) class invariant for
// diagonal involutions). Throws std::domain_error when a codeword has odd
// weight.
bool so6_almost_conjugate(const SignCodeGroup& g1, const SignCodeGroup& g2);

// A coordinate permutation carrying g1 to g2 setwise, searching all 720, or
// nullopt. perm[i] is the source position of target position i.
std::optional<std::array<int, 6>> permutation_equivalent(const SignCodeGroup& g1,
                                                         const SignCodeGroup& g2);

}  // namespace isospec
