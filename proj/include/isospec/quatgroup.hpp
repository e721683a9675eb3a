#pragma once

#include "isospec/quaternion.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace isospec {

// Finite subgroup of the unit quaternions, stored extensionally. Immutable
// after generation; all queries are read-only.
class FiniteQuatGroup {
  public:
    // Multiplicative closure of the generators; throws size_limit_error when
    // the closure would exceed cap.
    static FiniteQuatGroup generate(const std::vector<UnitQuaternion>& generators,
                                    size_t cap = 256);

    // Wraps an already-closed element set; verifies identity and closure.
    static FiniteQuatGroup from_elements(const std::set<UnitQuaternion>& elements);

    const std::set<UnitQuaternion>& elements() const { return elements_; }
    size_t order() const { return elements_.size(); }
    bool contains(const UnitQuaternion& q) const { return elements_.count(q) > 0; }

    const std::optional<std::string>& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    FiniteQuatGroup conjugated_by(const UnitQuaternion& g) const;

    bool operator==(const FiniteQuatGroup& other) const { return elements_ == other.elements_; }

  private:
    std::set<UnitQuaternion> elements_;
    std::optional<std::string> label_;
};

// Standard copy of an ADE group by label: "Zn" for n in {1,2,3,4,5,6,8,10},
// "2D2","2D4","2D6","2D8","2D10" (binary dihedral of order 2*label index),
// "2T", "2O", "2I". Cyclic and dihedral parameters outside this list have no
// exact model over Q(sqrt2,sqrt5) and are rejected.
FiniteQuatGroup ade_group(const std::string& label);

struct ConjugacyClass {
    UnitQuaternion representative;  // smallest member in the fixed total order
    size_t size = 0;
    AlgScalar real_part;
    std::set<UnitQuaternion> members;
};

// Internal conjugacy orbits, sorted by descending real part, then size, then
// representative. (Internal classes refine SU(2) classes: 2O has two distinct
// classes with real part 0.)
std::vector<ConjugacyClass> conjugacy_classes(const FiniteQuatGroup& g);

// True iff the multisets of real parts coincide (the SU(2) class invariant).
bool su2_almost_conjugate(const FiniteQuatGroup& g1, const FiniteQuatGroup& g2);

// Automorphism given extensionally; construction from generator images
// verifies multiplicativity on all pairs and bijectivity.
class GroupAutomorphism {
  public:
    static GroupAutomorphism from_generator_images(
        const FiniteQuatGroup& g,
        const std::vector<std::pair<UnitQuaternion, UnitQuaternion>>& images);

    const UnitQuaternion& operator()(const UnitQuaternion& q) const;

  private:
    std::map<UnitQuaternion, UnitQuaternion> map_;
};

// The canonical outer involutions: on 2O the map fixing (1+i+j+k)/2 and
// negating e^{i pi/4}; on 2I the map fixing (1+i+j+k)/2 and sending
// (phi + phi^-1 i + j)/2 to (-phi^-1 - phi i + k)/2.
GroupAutomorphism outer_automorphism(const FiniteQuatGroup& g);

// Image of one element under the canonical outer involution of 2O or 2I.
UnitQuaternion outer_action(const FiniteQuatGroup& g, const UnitQuaternion& element);

struct ClassActionRow {
    UnitQuaternion representative;
    size_t class_size = 0;
    AlgScalar real_part;
    UnitQuaternion image;          // image of the representative
    AlgScalar image_real_part;     // real part of the image class
    size_t image_class_index = 0;  // index into conjugacy_classes(g)
};

// Action of the canonical outer involution on conjugacy classes.
std::vector<ClassActionRow> class_action(const FiniteQuatGroup& g);

struct Bd4ActionRow {
    UnitQuaternion coset_representative;  // one of {q, -q}, the smaller
    UnitQuaternion image_i, image_j, image_k;
};

// Conjugation action of the 24 cosets of 2O/{+-1} on the imaginary units.
std::vector<Bd4ActionRow> bo_action_on_bd4();

}  // namespace isospec
