#pragma once

#include "isospec/quatgroup.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace isospec {

// Element of Spin(4) = SU(2) x SU(2); its conjugacy class is the pair of
// real parts.
struct QuatPair {
    UnitQuaternion a, b;

    friend QuatPair operator*(const QuatPair& p, const QuatPair& q) {
        return {p.a * q.a, p.b * q.b};
    }
    QuatPair inverse() const { return {a.inverse(), b.inverse()}; }
    QuatPair conjugated_by(const QuatPair& g) const {
        return {a.conjugated_by(g.a), b.conjugated_by(g.b)};
    }

    bool operator==(const QuatPair& q) const = default;
    std::strong_ordering operator<=>(const QuatPair& q) const = default;

    std::string str() const { return "(" + a.str() + ", " + b.str() + ")"; }
};

// Finite subgroup of SU(2) x SU(2), stored extensionally; construction
// verifies closure under multiplication.
class Spin4Subgroup {
  public:
    static Spin4Subgroup from_elements(std::set<QuatPair> elements);

    const std::set<QuatPair>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }
    bool contains(const QuatPair& q) const { return elements_.count(q) > 0; }

    Spin4Subgroup conjugated_by(const QuatPair& g) const;

    bool operator==(const Spin4Subgroup& o) const { return elements_ == o.elements_; }

  private:
    std::set<QuatPair> elements_;
};

// (A, A0, B, B0, theta): A0 normal in A, B0 normal in B, theta an isomorphism
// A/A0 -> B/B0 stored extensionally on canonical coset representatives (the
// smallest member of each coset in the fixed total order).
struct GoursatQuintuple {
    FiniteQuatGroup A, A0, B, B0;
    std::map<UnitQuaternion, UnitQuaternion> theta;

    // Throws std::invalid_argument when any invariant fails.
    void validate() const;
};

// Canonical representative of the coset g*H (smallest member).
UnitQuaternion coset_representative(const UnitQuaternion& g, const FiniteQuatGroup& H);

// All canonical coset representatives of H in G.
std::vector<UnitQuaternion> coset_representatives(const FiniteQuatGroup& G,
                                                  const FiniteQuatGroup& H);

// The fiber product {(a,b) in A x B : theta(a A0) = b B0}; order |A|*|B0|.
Spin4Subgroup build_subgroup(const GoursatQuintuple& q);

// The canonical quintuple of a subgroup C: A = pi1(C), B = pi2(C),
// A0 = pi1(ker pi2|C), B0 = pi2(ker pi1|C); round-trips with build_subgroup.
GoursatQuintuple quintuple_of(const Spin4Subgroup& c);

// True iff the multisets of real-part pairs coincide; on subgroups this is
// exactly almost conjugacy in Spin(4). Defined on arbitrary element
// collections so that non-closed contrast sets can be compared too.
bool spin4_almost_conjugate(const std::vector<QuatPair>& c1, const std::vector<QuatPair>& c2);
bool spin4_almost_conjugate(const Spin4Subgroup& c1, const Spin4Subgroup& c2);

// First witness g in the supplied list with g*C1*g^-1 = C2, if any.
std::optional<QuatPair> conjugate_by_witness(const Spin4Subgroup& c1, const Spin4Subgroup& c2,
                                             const std::vector<QuatPair>& witnesses);
std::optional<QuatPair> conjugate_by_witness(const std::vector<QuatPair>& c1,
                                             const std::vector<QuatPair>& c2,
                                             const std::vector<QuatPair>& witnesses);

// The two order-24 fiber products of Z3 with 2T over Z3 (A0 = {1},
// B0 = 2D4), using the two nontrivial coset isomorphisms. They are almost
// conjugate, and exchanged by conjugation with an element of {1} x 2O.
std::pair<Spin4Subgroup, Spin4Subgroup> fiber_pair_z3_2t();

// Z4 paired against 2D6 over Z4 (A0 = {1}, B0 = Z3): the second component is
// the genuine fiber-product subgroup; the first realigns the rotation cosets
// (pairing the order-4 generator of Z4 with the odd rotations of 2D6) and is
// not closed under multiplication. The two have different real-part-pair
// multisets, so they are not almost conjugate and no conjugating witness
// exists.
std::pair<std::vector<QuatPair>, Spin4Subgroup> contrast_pair_z4_2d6();

}  // namespace isospec
