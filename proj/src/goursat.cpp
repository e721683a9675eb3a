#include "isospec/goursat.hpp"

#include <algorithm>

namespace isospec {

namespace {

FiniteQuatGroup group_from_set(const std::set<UnitQuaternion>& elements) {
    return FiniteQuatGroup::from_elements(elements);
}

bool is_subgroup_of(const FiniteQuatGroup& H, const FiniteQuatGroup& G) {
    return std::all_of(H.elements().begin(), H.elements().end(),
                       [&](const UnitQuaternion& h) { return G.contains(h); });
}

bool is_normal_in(const FiniteQuatGroup& H, const FiniteQuatGroup& G) {
    for (const UnitQuaternion& g : G.elements())
        for (const UnitQuaternion& h : H.elements())
            if (!H.contains(h.conjugated_by(g))) return false;
    return true;
}

}  // namespace

Spin4Subgroup Spin4Subgroup::from_elements(std::set<QuatPair> elements) {
    if (elements.empty()) throw std::invalid_argument("Spin4Subgroup: empty element set");
    for (const QuatPair& p : elements)
        for (const QuatPair& q : elements)
            if (!elements.count(p * q))
                throw std::invalid_argument("Spin4Subgroup: set is not closed under products");
    if (!elements.count({UnitQuaternion::one(), UnitQuaternion::one()}))
        throw std::invalid_argument("Spin4Subgroup: missing identity");
    Spin4Subgroup out;
    out.elements_ = std::move(elements);
    return out;
}

Spin4Subgroup Spin4Subgroup::conjugated_by(const QuatPair& g) const {
    Spin4Subgroup out;
    for (const QuatPair& q : elements_) out.elements_.insert(q.conjugated_by(g));
    return out;
}

UnitQuaternion coset_representative(const UnitQuaternion& g, const FiniteQuatGroup& H) {
    UnitQuaternion best = g;
    for (const UnitQuaternion& h : H.elements()) best = std::min(best, g * h);
    return best;
}

std::vector<UnitQuaternion> coset_representatives(const FiniteQuatGroup& G,
                                                  const FiniteQuatGroup& H) {
    std::set<UnitQuaternion> reps;
    for (const UnitQuaternion& g : G.elements()) reps.insert(coset_representative(g, H));
    return {reps.begin(), reps.end()};
}

void GoursatQuintuple::validate() const {
    if (!is_subgroup_of(A0, A) || !is_subgroup_of(B0, B))
        throw std::invalid_argument("GoursatQuintuple: A0/B0 must be subgroups of A/B");
    if (!is_normal_in(A0, A)) throw std::invalid_argument("GoursatQuintuple: A0 not normal in A");
    if (!is_normal_in(B0, B)) throw std::invalid_argument("GoursatQuintuple: B0 not normal in B");
    if (A.order() % A0.order() != 0 || B.order() % B0.order() != 0 ||
        A.order() / A0.order() != B.order() / B0.order())
        throw std::invalid_argument("GoursatQuintuple: quotient orders differ");

    const std::vector<UnitQuaternion> a_reps = coset_representatives(A, A0);
    const std::vector<UnitQuaternion> b_reps = coset_representatives(B, B0);
    if (theta.size() != a_reps.size())
        throw std::invalid_argument("GoursatQuintuple: theta domain is not A/A0");
    std::set<UnitQuaternion> image;
    for (const UnitQuaternion& r : a_reps) {
        auto it = theta.find(r);
        if (it == theta.end())
            throw std::invalid_argument("GoursatQuintuple: theta misses a coset of A0");
        if (coset_representative(it->second, B0) != it->second ||
            std::find(b_reps.begin(), b_reps.end(), it->second) == b_reps.end())
            throw std::invalid_argument("GoursatQuintuple: theta image is not a B0-coset rep");
        image.insert(it->second);
    }
    if (image.size() != b_reps.size())
        throw std::invalid_argument("GoursatQuintuple: theta is not bijective");
    // Multiplicative on cosets.
    for (const UnitQuaternion& r1 : a_reps) {
        for (const UnitQuaternion& r2 : a_reps) {
            const UnitQuaternion lhs = theta.at(coset_representative(r1 * r2, A0));
            const UnitQuaternion rhs = coset_representative(theta.at(r1) * theta.at(r2), B0);
            if (!(lhs == rhs))
                throw std::invalid_argument("GoursatQuintuple: theta is not multiplicative");
        }
    }
}

Spin4Subgroup build_subgroup(const GoursatQuintuple& q) {
    q.validate();
    std::set<QuatPair> elements;
    for (const UnitQuaternion& a : q.A.elements()) {
        const UnitQuaternion target = q.theta.at(coset_representative(a, q.A0));
        for (const UnitQuaternion& h : q.B0.elements()) elements.insert({a, target * h});
    }
    if (elements.size() != q.A.order() * q.B0.order())
        throw std::logic_error("build_subgroup: unexpected order");
    return Spin4Subgroup::from_elements(std::move(elements));
}

GoursatQuintuple quintuple_of(const Spin4Subgroup& c) {
    std::set<UnitQuaternion> a_set, b_set, a0_set, b0_set;
    for (const QuatPair& p : c.elements()) {
        a_set.insert(p.a);
        b_set.insert(p.b);
        if (p.b == UnitQuaternion::one()) a0_set.insert(p.a);
        if (p.a == UnitQuaternion::one()) b0_set.insert(p.b);
    }
    GoursatQuintuple q;
    q.A = group_from_set(a_set);
    q.B = group_from_set(b_set);
    q.A0 = group_from_set(a0_set);
    q.B0 = group_from_set(b0_set);
    for (const QuatPair& p : c.elements())
        q.theta[coset_representative(p.a, q.A0)] = coset_representative(p.b, q.B0);
    q.validate();
    return q;
}

namespace {

std::vector<std::pair<AlgScalar, AlgScalar>> real_pairs(const std::vector<QuatPair>& c) {
    std::vector<std::pair<AlgScalar, AlgScalar>> out;
    out.reserve(c.size());
    for (const QuatPair& p : c) out.emplace_back(p.a.real_part(), p.b.real_part());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool spin4_almost_conjugate(const std::vector<QuatPair>& c1, const std::vector<QuatPair>& c2) {
    return real_pairs(c1) == real_pairs(c2);
}

bool spin4_almost_conjugate(const Spin4Subgroup& c1, const Spin4Subgroup& c2) {
    return spin4_almost_conjugate(
        std::vector<QuatPair>(c1.elements().begin(), c1.elements().end()),
        std::vector<QuatPair>(c2.elements().begin(), c2.elements().end()));
}

std::optional<QuatPair> conjugate_by_witness(const Spin4Subgroup& c1, const Spin4Subgroup& c2,
                                             const std::vector<QuatPair>& witnesses) {
    for (const QuatPair& g : witnesses)
        if (c1.conjugated_by(g) == c2) return g;
    return std::nullopt;
}

std::optional<QuatPair> conjugate_by_witness(const std::vector<QuatPair>& c1,
                                             const std::vector<QuatPair>& c2,
                                             const std::vector<QuatPair>& witnesses) {
    const std::set<QuatPair> target(c2.begin(), c2.end());
    for (const QuatPair& g : witnesses) {
        std::set<QuatPair> image;
        for (const QuatPair& q : c1) image.insert(q.conjugated_by(g));
        if (image == target) return g;
    }
    return std::nullopt;
}

namespace {

// 2D6 realized as <w, s> with w = (1+i+j+k)/2 of order 6 and s = (i-j)/sqrt2
// inverting it; B0 = <w^2> = Z3. Returns {B, B0, w, s}.
struct Dihedral6 {
    FiniteQuatGroup B, B0;
    UnitQuaternion w, s;
};

Dihedral6 dihedral6() {
    Dihedral6 d;
    d.B = ade_group("2D6");
    d.w = parse_quaternion("1/2+1/2*i+1/2*j+1/2*k");
    d.s = parse_quaternion("1/2*sqrt(2)*i-1/2*sqrt(2)*j");
    d.B0 = FiniteQuatGroup::generate({d.w * d.w});
    return d;
}

}  // namespace

std::pair<Spin4Subgroup, Spin4Subgroup> fiber_pair_z3_2t() {
    GoursatQuintuple q1;
    q1.A = ade_group("Z3");
    q1.A0 = ade_group("Z1");
    q1.B = ade_group("2T");
    q1.B0 = ade_group("2D4");
    const UnitQuaternion g = parse_quaternion("-1/2+1/2*i+1/2*j+1/2*k");  // order 3
    const UnitQuaternion s = parse_quaternion("1/2+1/2*i+1/2*j+1/2*k");   // order 6
    const UnitQuaternion one = UnitQuaternion::one();
    const UnitQuaternion rep_s = coset_representative(s, q1.B0);
    const UnitQuaternion rep_s2 = coset_representative(s * s, q1.B0);
    const UnitQuaternion rep_1b = coset_representative(one, q1.B0);
    GoursatQuintuple q2 = q1;
    q1.theta = {{coset_representative(one, q1.A0), rep_1b},
                {coset_representative(g, q1.A0), rep_s2},
                {coset_representative(g * g, q1.A0), rep_s}};
    q2.theta = {{coset_representative(one, q2.A0), rep_1b},
                {coset_representative(g, q2.A0), rep_s},
                {coset_representative(g * g, q2.A0), rep_s2}};
    return {build_subgroup(q1), build_subgroup(q2)};
}

std::pair<std::vector<QuatPair>, Spin4Subgroup> contrast_pair_z4_2d6() {
    const Dihedral6 d = dihedral6();
    const UnitQuaternion i = UnitQuaternion::i();
    const UnitQuaternion one = UnitQuaternion::one();

    // Cosets of B0 in B: rotations split into even {1,w^2,w^4} and odd
    // {w,w^3,w^5}; reflections into s*even and s*odd.
    auto coset = [&](const UnitQuaternion& g) {
        std::vector<UnitQuaternion> out;
        for (const UnitQuaternion& h : d.B0.elements()) out.push_back(g * h);
        return out;
    };

    std::vector<QuatPair> misaligned;
    for (auto&& [a, bs] : std::vector<std::pair<UnitQuaternion, std::vector<UnitQuaternion>>>{
             {one, coset(one)},
             {i, coset(d.w)},
             {-one, coset(d.s)},
             {-i, coset(d.s * d.w)}}) {
        for (const UnitQuaternion& b : bs) misaligned.push_back({a, b});
    }

    GoursatQuintuple q;
    q.A = ade_group("Z4");
    q.A0 = ade_group("Z1");
    q.B = d.B;
    q.B0 = d.B0;
    q.theta = {{coset_representative(one, q.A0), coset_representative(one, d.B0)},
               {coset_representative(i, q.A0), coset_representative(d.s, d.B0)},
               {coset_representative(-one, q.A0), coset_representative(d.w, d.B0)},
               {coset_representative(-i, q.A0), coset_representative(d.s * d.w, d.B0)}};
    return {std::move(misaligned), build_subgroup(q)};
}

}  // namespace isospec
