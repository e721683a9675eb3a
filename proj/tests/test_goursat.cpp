#include "isospec/goursat.hpp"

#include "doctest.h"

#include <random>

using namespace isospec;

namespace {

const UnitQuaternion kOne = UnitQuaternion::one();

std::map<UnitQuaternion, UnitQuaternion> identity_theta(const FiniteQuatGroup& A,
                                                        const FiniteQuatGroup& A0,
                                                        const FiniteQuatGroup& B0) {
    std::map<UnitQuaternion, UnitQuaternion> theta;
    for (const UnitQuaternion& r : coset_representatives(A, A0))
        theta[r] = coset_representative(r, B0);
    return theta;
}

// trivial theta on the one-coset quotients A/A, B/B
GoursatQuintuple product_quintuple(const FiniteQuatGroup& A, const FiniteQuatGroup& B) {
    GoursatQuintuple q;
    q.A = A;
    q.A0 = A;
    q.B = B;
    q.B0 = B;
    q.theta[coset_representative(kOne, A)] = coset_representative(kOne, B);
    return q;
}

std::vector<QuatPair> one_cross_2o() {
    const FiniteQuatGroup bo = ade_group("2O");
    std::vector<QuatPair> out;
    for (const UnitQuaternion& w : bo.elements()) out.push_back({kOne, w});
    return out;
}

std::optional<std::set<QuatPair>> close_under_products(std::vector<QuatPair> gens, size_t cap) {
    std::set<QuatPair> out{{kOne, kOne}};
    std::vector<QuatPair> frontier{{kOne, kOne}};
    while (!frontier.empty()) {
        const QuatPair u = frontier.back();
        frontier.pop_back();
        for (const QuatPair& g : gens) {
            QuatPair v = u * g;
            if (out.insert(v).second) {
                if (out.size() > cap) return std::nullopt;
                frontier.push_back(std::move(v));
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("build_subgroup: products and diagonals") {
    const FiniteQuatGroup z4 = ade_group("Z4");
    const FiniteQuatGroup bd4 = ade_group("2D4");

    const Spin4Subgroup product = build_subgroup(product_quintuple(z4, bd4));
    CHECK(product.order() == 32);
    for (const UnitQuaternion& a : z4.elements())
        for (const UnitQuaternion& b : bd4.elements()) CHECK(product.contains({a, b}));

    GoursatQuintuple diag;
    diag.A = bd4;
    diag.A0 = ade_group("Z1");
    diag.B = bd4;
    diag.B0 = ade_group("Z1");
    diag.theta = identity_theta(diag.A, diag.A0, diag.B0);
    const Spin4Subgroup delta = build_subgroup(diag);
    CHECK(delta.order() == 8);
    for (const UnitQuaternion& a : bd4.elements()) CHECK(delta.contains({a, a}));

    // invalid quintuple: theta not multiplicative
    GoursatQuintuple bad;
    bad.A = z4;
    bad.A0 = ade_group("Z1");
    bad.B = z4;
    bad.B0 = ade_group("Z1");
    for (const UnitQuaternion& r : coset_representatives(bad.A, bad.A0)) bad.theta[r] = r;
    bad.theta[UnitQuaternion::i()] = -UnitQuaternion::i();
    bad.theta[-UnitQuaternion::i()] = UnitQuaternion::i();
    bad.theta[-kOne] = -kOne;
    CHECK_NOTHROW(build_subgroup(bad));  // inversion is an automorphism of Z4
    bad.theta[-kOne] = kOne;
    bad.theta[kOne] = -kOne;
    CHECK_THROWS_AS(build_subgroup(bad), std::invalid_argument);
}

TEST_CASE("quintuple_of recovers the canonical data") {
    const FiniteQuatGroup bt = ade_group("2T");

    // Diagonal of 2T
    std::set<QuatPair> diag_elems;
    for (const UnitQuaternion& a : bt.elements()) diag_elems.insert({a, a});
    const GoursatQuintuple dq = quintuple_of(Spin4Subgroup::from_elements(diag_elems));
    CHECK(dq.A.order() == 24);
    CHECK(dq.B.order() == 24);
    CHECK(dq.A0.order() == 1);
    CHECK(dq.B0.order() == 1);

    // Full product Z4 x 2D4
    const Spin4Subgroup product =
        build_subgroup(product_quintuple(ade_group("Z4"), ade_group("2D4")));
    const GoursatQuintuple pq = quintuple_of(product);
    CHECK(pq.A.order() == 4);
    CHECK(pq.A0.order() == 4);
    CHECK(pq.B.order() == 8);
    CHECK(pq.B0.order() == 8);

    // The order-24 fiber product of Z3 with 2T over Z3
    const auto [g1, g2] = fiber_pair_z3_2t();
    CHECK(g1.order() == 24);
    const GoursatQuintuple fq = quintuple_of(g1);
    CHECK(fq.A.order() == 3);
    CHECK(fq.A0.order() == 1);
    CHECK(fq.B.order() == 24);
    CHECK(fq.B0.order() == 8);
}

TEST_CASE("fiber pair of Z3 with 2T: almost conjugate, witness in {1} x 2O") {
    const auto [g1, g2] = fiber_pair_z3_2t();
    CHECK(g1.order() == 24);
    CHECK(g2.order() == 24);

    // Orientation of the first group: the order-3 generator pairs with the
    // coset (1-i-j-k)/2 * 2D4 of 2T, the displayed set.
    {
        const UnitQuaternion g = parse_quaternion("-1/2+1/2*i+1/2*j+1/2*k");
        const UnitQuaternion s_inv = parse_quaternion("1/2-1/2*i-1/2*j-1/2*k");
        const FiniteQuatGroup bd4 = ade_group("2D4");
        std::set<UnitQuaternion> coset;
        for (const UnitQuaternion& h : bd4.elements()) coset.insert(s_inv * h);
        size_t matched = 0;
        for (const QuatPair& p : g1.elements()) {
            if (!(p.a == g)) continue;
            CHECK(coset.count(p.b) == 1);
            ++matched;
        }
        CHECK(matched == 8);
    }
    CHECK(!(g1 == g2));
    CHECK(spin4_almost_conjugate(g1, g2));
    CHECK(spin4_almost_conjugate(g1, g1));

    const auto witness = conjugate_by_witness(g1, g2, one_cross_2o());
    REQUIRE(witness.has_value());
    CHECK(g1.conjugated_by(*witness) == g2);

    // identity is found when conjugating a group to itself
    std::vector<QuatPair> with_identity{{kOne, kOne}};
    const auto self = conjugate_by_witness(g1, g1, with_identity);
    REQUIRE(self.has_value());
    CHECK(*self == QuatPair{kOne, kOne});
}

TEST_CASE("contrast pair of Z4 with 2D6: not almost conjugate, no witness") {
    const auto [misaligned, fiber] = contrast_pair_z4_2d6();
    CHECK(misaligned.size() == 12);
    CHECK(fiber.order() == 12);

    const std::vector<QuatPair> fiber_elems(fiber.elements().begin(), fiber.elements().end());
    CHECK_FALSE(spin4_almost_conjugate(misaligned, fiber_elems));

    // The misaligned set is genuinely not a subgroup.
    CHECK_THROWS_AS(Spin4Subgroup::from_elements(
                        std::set<QuatPair>(misaligned.begin(), misaligned.end())),
                    std::invalid_argument);

    // No conjugating witness can exist; scan {1} x 2O and a sample of pairs.
    std::vector<QuatPair> witnesses = one_cross_2o();
    const FiniteQuatGroup bo = ade_group("2O");
    for (const UnitQuaternion& w : bo.elements()) witnesses.push_back({w, w});
    CHECK_FALSE(conjugate_by_witness(misaligned, fiber_elems, witnesses).has_value());
}

TEST_CASE("the two valid coset isomorphisms of the Z4/2D6 quintuple give conjugate groups") {
    // Swapping the two generators of the Z4 quotient is induced by
    // conjugation with (j, 1), so the two theta choices cannot produce an
    // almost-conjugate-but-not-conjugate pair.
    const auto [misaligned, fiber] = contrast_pair_z4_2d6();
    (void)misaligned;
    const GoursatQuintuple q = quintuple_of(fiber);

    // Build the other isomorphism: compose theta with inversion on Z4.
    GoursatQuintuple q2 = q;
    q2.theta.clear();
    for (const auto& [from, to] : q.theta)
        q2.theta[coset_representative(from.inverse(), q.A0)] = to;
    const Spin4Subgroup other = build_subgroup(q2);

    CHECK(spin4_almost_conjugate(fiber, other));
    const std::vector<QuatPair> witness{{UnitQuaternion::j(), kOne}};
    CHECK(conjugate_by_witness(fiber, other, witness).has_value());
}

TEST_CASE("almost conjugacy is an equivalence relation on a finite collection") {
    const auto pair = fiber_pair_z3_2t();
    std::set<QuatPair> diag;
    const FiniteQuatGroup bt = ade_group("2T");
    for (const UnitQuaternion& a : bt.elements()) diag.insert({a, a});
    const std::vector<Spin4Subgroup> collection = {
        pair.first, pair.second, Spin4Subgroup::from_elements(diag),
        pair.first.conjugated_by({UnitQuaternion::j(), UnitQuaternion::k()})};
    for (const auto& a : collection) {
        CHECK(spin4_almost_conjugate(a, a));
        for (const auto& b : collection) {
            CHECK(spin4_almost_conjugate(a, b) == spin4_almost_conjugate(b, a));
            for (const auto& c : collection)
                if (spin4_almost_conjugate(a, b) && spin4_almost_conjugate(b, c))
                    CHECK(spin4_almost_conjugate(a, c));
        }
    }
}

TEST_CASE("almost conjugacy is invariant under conjugating either side") {
    const auto [g1, g2] = fiber_pair_z3_2t();
    const QuatPair w1{parse_quaternion("1/2*sqrt(2)+1/2*sqrt(2)*j"),
                      parse_quaternion("1/2-1/2*i+1/2*j+1/2*k")};
    const QuatPair w2{parse_quaternion("1/2*sqrt(2)*i+1/2*sqrt(2)*k"), UnitQuaternion::i()};
    CHECK(spin4_almost_conjugate(g1.conjugated_by(w1), g2));
    CHECK(spin4_almost_conjugate(g1, g2.conjugated_by(w2)));
    CHECK(spin4_almost_conjugate(g1.conjugated_by(w1), g2.conjugated_by(w2)));
}

TEST_CASE("round trip on a brute-force family of subgroups of 2T x 2T") {
    const FiniteQuatGroup bt = ade_group("2T");
    const std::vector<UnitQuaternion> bt_elems(bt.elements().begin(), bt.elements().end());
    std::mt19937 rng(424242);
    std::uniform_int_distribution<size_t> pick(0, bt_elems.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);

    std::set<std::set<QuatPair>> family;
    for (int trial = 0; trial < 250; ++trial) {
        std::vector<QuatPair> gens;
        for (int c = count(rng); c > 0; --c) gens.push_back({bt_elems[pick(rng)], bt_elems[pick(rng)]});
        const auto closed = close_under_products(std::move(gens), 96);
        if (closed) family.insert(*closed);
    }
    CHECK(family.size() >= 20);

    for (const auto& elements : family) {
        const Spin4Subgroup c = Spin4Subgroup::from_elements(elements);
        const GoursatQuintuple q = quintuple_of(c);
        CHECK(q.A.order() * q.B0.order() == c.order());
        CHECK(q.A0.order() * q.B.order() == c.order());
        CHECK(build_subgroup(q) == c);
    }
}
