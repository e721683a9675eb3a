#include "isospec/quatgroup.hpp"

#include <algorithm>
#include <deque>

namespace isospec {

namespace {

const AlgScalar kHalf(Rational(1, 2));
const AlgScalar kInvSqrt2 = AlgScalar::inv_sqrt2();
// phi/2 and phi^-1/2, the real parts of the order-10 and order-5 rotations.
const AlgScalar kHalfGolden(Rational(1, 4), 0, Rational(1, 4), 0);
const AlgScalar kHalfGoldenInv(Rational(-1, 4), 0, Rational(1, 4), 0);

UnitQuaternion half_quat(int sw, int sx, int sy, int sz) {
    auto c = [](int s) { return AlgScalar(Rational(s, 2)); };
    return {c(sw), c(sx), c(sy), c(sz)};
}

// Order-6 rotation (1+i+j+k)/2 about the (1,1,1) axis.
UnitQuaternion rot6() {
    return half_quat(1, 1, 1, 1);
}
// e^{i pi/4} = (1+i)/sqrt2.
UnitQuaternion rot8() {
    return {kInvSqrt2, kInvSqrt2, AlgScalar(), AlgScalar()};
}
// Order-10 rotation (phi + phi^-1 i + j)/2.
UnitQuaternion rot10() {
    return {kHalfGolden, kHalfGoldenInv, kHalf, AlgScalar()};
}
// (i-j)/sqrt2: an imaginary unit orthogonal to the axis of rot6.
UnitQuaternion flip_ij() {
    return {AlgScalar(), kInvSqrt2, -kInvSqrt2, AlgScalar()};
}

}  // namespace

FiniteQuatGroup FiniteQuatGroup::generate(const std::vector<UnitQuaternion>& generators,
                                          size_t cap) {
    FiniteQuatGroup g;
    g.elements_.insert(UnitQuaternion::one());
    std::deque<UnitQuaternion> frontier(g.elements_.begin(), g.elements_.end());
    while (!frontier.empty()) {
        const UnitQuaternion u = frontier.front();
        frontier.pop_front();
        for (const UnitQuaternion& gen : generators) {
            UnitQuaternion v = u * gen;
            if (g.elements_.insert(v).second) {
                if (g.elements_.size() > cap)
                    throw size_limit_error("FiniteQuatGroup: closure exceeds cap " +
                                           std::to_string(cap));
                frontier.push_back(std::move(v));
            }
        }
    }
    return g;
}

FiniteQuatGroup FiniteQuatGroup::from_elements(const std::set<UnitQuaternion>& elements) {
    if (!elements.count(UnitQuaternion::one()))
        throw std::invalid_argument("FiniteQuatGroup: missing identity");
    for (const UnitQuaternion& p : elements)
        for (const UnitQuaternion& q : elements)
            if (!elements.count(p * q))
                throw std::invalid_argument("FiniteQuatGroup: set is not closed under products");
    FiniteQuatGroup g;
    g.elements_ = elements;
    return g;
}

FiniteQuatGroup FiniteQuatGroup::conjugated_by(const UnitQuaternion& g) const {
    FiniteQuatGroup out;
    for (const UnitQuaternion& q : elements_) out.elements_.insert(q.conjugated_by(g));
    if (label_) out.label_ = *label_ + "'";
    return out;
}

FiniteQuatGroup ade_group(const std::string& label) {
    std::vector<UnitQuaternion> gens;
    if (label.size() >= 2 && label[0] == 'Z') {
        const int n = std::stoi(label.substr(1));
        switch (n) {
            case 1: gens = {UnitQuaternion::one()}; break;
            case 2: gens = {-UnitQuaternion::one()}; break;
            case 3: gens = {rot6() * rot6()}; break;
            case 4: gens = {UnitQuaternion::i()}; break;
            case 5: gens = {rot10() * rot10()}; break;
            case 6: gens = {rot6()}; break;
            case 8: gens = {rot8()}; break;
            case 10: gens = {rot10()}; break;
            default:
                throw std::invalid_argument(
                    "ade_group: Z" + std::to_string(n) +
                    " has no exact realization over Q(sqrt2,sqrt5); supported n: "
                    "1,2,3,4,5,6,8,10");
        }
    } else if (label.size() >= 3 && label[0] == '2' && label[1] == 'D') {
        const int two_n = std::stoi(label.substr(2));
        if (two_n % 2 != 0) throw std::invalid_argument("ade_group: 2D index must be even");
        switch (two_n / 2) {
            case 1: gens = {UnitQuaternion::j(), -UnitQuaternion::one()}; break;
            case 2: gens = {UnitQuaternion::j(), UnitQuaternion::i()}; break;
            case 3: gens = {flip_ij(), rot6()}; break;
            case 4: gens = {UnitQuaternion::j(), rot8()}; break;
            case 5: gens = {UnitQuaternion::k(), rot10()}; break;
            default:
                throw std::invalid_argument(
                    "ade_group: 2D" + std::to_string(two_n) +
                    " has no exact realization over Q(sqrt2,sqrt5); supported: "
                    "2D2,2D4,2D6,2D8,2D10");
        }
    } else if (label == "2T") {
        gens = {half_quat(1, 1, 1, 1), half_quat(1, 1, 1, -1)};
    } else if (label == "2O") {
        gens = {rot6(), rot8()};
    } else if (label == "2I") {
        gens = {rot6(), rot10()};
    } else {
        throw std::invalid_argument("ade_group: unknown label '" + label + "'");
    }
    FiniteQuatGroup g = FiniteQuatGroup::generate(gens);
    g.set_label(label);
    return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteQuatGroup& g) {
    std::vector<ConjugacyClass> classes;
    std::set<UnitQuaternion> seen;
    for (const UnitQuaternion& q : g.elements()) {
        if (seen.count(q)) continue;
        ConjugacyClass cls;
        for (const UnitQuaternion& h : g.elements()) cls.members.insert(q.conjugated_by(h));
        for (const UnitQuaternion& m : cls.members) seen.insert(m);
        cls.representative = *cls.members.begin();
        cls.size = cls.members.size();
        cls.real_part = cls.representative.real_part();
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        const int c = a.real_part.compare_numeric(b.real_part);
        if (c != 0) return c > 0;
        if (a.size != b.size) return a.size < b.size;
        return a.representative < b.representative;
    });
    return classes;
}

bool su2_almost_conjugate(const FiniteQuatGroup& g1, const FiniteQuatGroup& g2) {
    if (g1.order() != g2.order()) return false;
    std::vector<AlgScalar> r1, r2;
    for (const UnitQuaternion& q : g1.elements()) r1.push_back(q.real_part());
    for (const UnitQuaternion& q : g2.elements()) r2.push_back(q.real_part());
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    return r1 == r2;
}

GroupAutomorphism GroupAutomorphism::from_generator_images(
    const FiniteQuatGroup& g,
    const std::vector<std::pair<UnitQuaternion, UnitQuaternion>>& images) {
    for (const auto& [from, to] : images) {
        if (!g.contains(from))
            throw std::invalid_argument("GroupAutomorphism: generator outside group");
        if (!g.contains(to))
            throw std::invalid_argument("GroupAutomorphism: generator image outside group");
    }
    GroupAutomorphism out;
    out.map_[UnitQuaternion::one()] = UnitQuaternion::one();
    // Propagate along words in the generators.
    std::deque<UnitQuaternion> frontier{UnitQuaternion::one()};
    while (!frontier.empty()) {
        const UnitQuaternion u = frontier.front();
        frontier.pop_front();
        const UnitQuaternion fu = out.map_.at(u);
        for (const auto& [gen, gen_image] : images) {
            UnitQuaternion v = u * gen;
            if (out.map_.emplace(v, fu * gen_image).second) frontier.push_back(std::move(v));
        }
    }
    if (out.map_.size() != g.order())
        throw std::invalid_argument("GroupAutomorphism: generators do not generate the group");
    // Well-definedness: multiplicative on all pairs, and a bijection.
    std::set<UnitQuaternion> range;
    for (const auto& [q, fq] : out.map_) range.insert(fq);
    if (range.size() != g.order())
        throw std::invalid_argument("GroupAutomorphism: generator images define no bijection");
    for (const auto& [a, fa] : out.map_)
        for (const auto& [b, fb] : out.map_)
            if (!(out.map_.at(a * b) == fa * fb))
                throw std::invalid_argument(
                    "GroupAutomorphism: generator images are not multiplicative");
    return out;
}

const UnitQuaternion& GroupAutomorphism::operator()(const UnitQuaternion& q) const {
    auto it = map_.find(q);
    if (it == map_.end()) throw std::invalid_argument("GroupAutomorphism: element outside group");
    return it->second;
}

GroupAutomorphism outer_automorphism(const FiniteQuatGroup& g) {
    if (g.label() == "2O") {
        // Fixes s = (1+i+j+k)/2, sends t = e^{i pi/4} to -t.
        return GroupAutomorphism::from_generator_images(g, {{rot6(), rot6()}, {rot8(), -rot8()}});
    }
    if (g.label() == "2I") {
        // Fixes s = (1+i+j+k)/2, sends t = (phi + phi^-1 i + j)/2 to
        // (-phi^-1 - phi i + k)/2.
        const UnitQuaternion t_image(-kHalfGoldenInv, -kHalfGolden, AlgScalar(), kHalf);
        return GroupAutomorphism::from_generator_images(g,
                                                        {{rot6(), rot6()}, {rot10(), t_image}});
    }
    throw std::invalid_argument("outer_automorphism: defined for the 2O and 2I standard copies");
}

UnitQuaternion outer_action(const FiniteQuatGroup& g, const UnitQuaternion& element) {
    if (!g.contains(element)) throw std::invalid_argument("outer_action: element outside group");
    return outer_automorphism(g)(element);
}

std::vector<ClassActionRow> class_action(const FiniteQuatGroup& g) {
    const GroupAutomorphism phi = outer_automorphism(g);
    const std::vector<ConjugacyClass> classes = conjugacy_classes(g);
    std::vector<ClassActionRow> rows;
    for (const ConjugacyClass& cls : classes) {
        ClassActionRow row;
        row.representative = cls.representative;
        row.class_size = cls.size;
        row.real_part = cls.real_part;
        row.image = phi(cls.representative);
        row.image_real_part = row.image.real_part();
        row.image_class_index = classes.size();
        for (size_t i = 0; i < classes.size(); ++i) {
            if (classes[i].members.count(row.image)) {
                row.image_class_index = i;
                break;
            }
        }
        if (row.image_class_index == classes.size())
            throw std::logic_error("class_action: image not found in any class");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Bd4ActionRow> bo_action_on_bd4() {
    const FiniteQuatGroup bo = ade_group("2O");
    std::set<UnitQuaternion> reps;
    for (const UnitQuaternion& q : bo.elements()) reps.insert(std::min(q, -q));
    std::vector<Bd4ActionRow> rows;
    for (const UnitQuaternion& q : reps) {
        rows.push_back({q, UnitQuaternion::i().conjugated_by(q),
                        UnitQuaternion::j().conjugated_by(q),
                        UnitQuaternion::k().conjugated_by(q)});
    }
    return rows;
}

}  // namespace isospec
