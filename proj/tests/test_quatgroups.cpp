#include "isospec/quatgroup.hpp"

#include "doctest.h"

#include <cmath>
#include <map>
#include <random>

using namespace isospec;

namespace {

const AlgScalar kHalf(Rational(1, 2));
// (1 + sqrt5)/4 and (1 - sqrt5)/4
const AlgScalar kQuarterPlus(Rational(1, 4), 0, Rational(1, 4), 0);
const AlgScalar kQuarterMinus(Rational(1, 4), 0, Rational(-1, 4), 0);

std::mt19937 rng(5577123);

// Exact unit quaternion from a random integer 4-tuple whose norm is a
// perfect square.
UnitQuaternion random_unit_quaternion() {
    std::uniform_int_distribution<long> pick(-9, 9);
    while (true) {
        const long a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
        const long n = a * a + b * b + c * c + d * d;
        if (n == 0) continue;
        const long s = static_cast<long>(std::lround(std::sqrt(static_cast<double>(n))));
        if (s * s != n) continue;
        return {Rational(a, s), Rational(b, s), Rational(c, s), Rational(d, s)};
    }
}

std::map<std::pair<std::string, size_t>, size_t> class_key_index(
    const std::vector<ConjugacyClass>& classes) {
    std::map<std::pair<std::string, size_t>, size_t> out;
    for (size_t i = 0; i < classes.size(); ++i)
        out[{classes[i].real_part.str(), classes[i].size}] = i;
    return out;
}

}  // namespace

TEST_CASE("quaternion arithmetic and parsing") {
    const UnitQuaternion i = UnitQuaternion::i(), j = UnitQuaternion::j(), k = UnitQuaternion::k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == -UnitQuaternion::one());
    CHECK(i.inverse() == -i);
    CHECK(parse_quaternion("1/2+1/2*i+1/2*j+1/2*k").order() == 6);
    CHECK(parse_quaternion("1/2*sqrt(2)+1/2*sqrt(2)*i").order() == 8);
    const UnitQuaternion t = parse_quaternion("(1/4+1/4*sqrt(5))+(-1/4+1/4*sqrt(5))*i+1/2*j");
    CHECK(t.order() == 10);
    CHECK(parse_quaternion(t.str()) == t);
    CHECK_THROWS_AS(parse_quaternion("1+i"), std::invalid_argument);  // norm 2
    for (int iter = 0; iter < 50; ++iter) {
        const UnitQuaternion q = random_unit_quaternion();
        CHECK(parse_quaternion(q.str()) == q);
        CHECK(q * q.inverse() == UnitQuaternion::one());
    }
}

TEST_CASE("generate") {
    const FiniteQuatGroup z4 = FiniteQuatGroup::generate({UnitQuaternion::i()});
    CHECK(z4.order() == 4);
    CHECK(z4.contains(-UnitQuaternion::one()));

    const FiniteQuatGroup bo = FiniteQuatGroup::generate(
        {parse_quaternion("1/2+1/2*i+1/2*j+1/2*k"), parse_quaternion("1/2*sqrt(2)+1/2*sqrt(2)*i")});
    CHECK(bo.order() == 48);

    const FiniteQuatGroup bi = FiniteQuatGroup::generate(
        {parse_quaternion("1/2+1/2*i+1/2*j+1/2*k"),
         parse_quaternion("(1/4+1/4*sqrt(5))+(-1/4+1/4*sqrt(5))*i+1/2*j")});
    CHECK(bi.order() == 120);

    CHECK_THROWS_AS(FiniteQuatGroup::generate({parse_quaternion("1/2+1/2*i+1/2*j+1/2*k")}, 5),
                    size_limit_error);
}

TEST_CASE("ade_group orders and elements") {
    const std::pair<std::string, size_t> expected[] = {
        {"Z1", 1},  {"Z2", 2},  {"Z3", 3},   {"Z4", 4},   {"Z5", 5},
        {"Z6", 6},  {"Z8", 8},  {"Z10", 10}, {"2D2", 4},  {"2D4", 8},
        {"2D6", 12}, {"2D8", 16}, {"2D10", 20}, {"2T", 24}, {"2O", 48}, {"2I", 120}};
    for (const auto& [label, order] : expected) {
        const FiniteQuatGroup g = ade_group(label);
        CHECK(g.order() == order);
        CHECK(g.label() == label);
        // closure sanity: conjugation by own elements fixes the group
        int checked = 0;
        for (const UnitQuaternion& q : g.elements()) {
            CHECK(g.conjugated_by(q) == g);
            if (++checked >= 4) break;
        }
    }

    // 2D4 = {+-1, +-i, +-j, +-k}
    const FiniteQuatGroup bd4 = ade_group("2D4");
    for (const UnitQuaternion& u :
         {UnitQuaternion::one(), UnitQuaternion::i(), UnitQuaternion::j(), UnitQuaternion::k()}) {
        CHECK(bd4.contains(u));
        CHECK(bd4.contains(-u));
    }

    // 2T = 2D4 together with the sixteen (+-1+-i+-j+-k)/2
    const FiniteQuatGroup bt = ade_group("2T");
    for (const UnitQuaternion& u : bd4.elements()) CHECK(bt.contains(u));
    for (int sw : {1, -1})
        for (int sx : {1, -1})
            for (int sy : {1, -1})
                for (int sz : {1, -1})
                    CHECK(bt.contains(UnitQuaternion(Rational(sw, 2), Rational(sx, 2),
                                                     Rational(sy, 2), Rational(sz, 2))));

    // unsupported parameters are rejected
    for (const char* bad : {"Z7", "Z9", "Z12", "Z20", "2D12", "2D14", "2X", "Q8"})
        CHECK_THROWS_AS(ade_group(bad), std::invalid_argument);
}

TEST_CASE("conjugacy classes of 2O match the reference table") {
    const auto classes = conjugacy_classes(ade_group("2O"));
    REQUIRE(classes.size() == 8);
    size_t total = 0;
    for (const auto& c : classes) total += c.size;
    CHECK(total == 48);

    // (real part, size) pairs, sorted by descending real part.
    const std::pair<std::string, size_t> expected[] = {
        {"1", 1},           {"1/2*sqrt(2)", 6}, {"1/2", 8},  {"0", 6},
        {"0", 12},          {"-1/2", 8},        {"-1/2*sqrt(2)", 6}, {"-1", 1}};
    for (size_t i = 0; i < 8; ++i) {
        CHECK(classes[i].real_part.str() == expected[i].first);
        CHECK(classes[i].size == expected[i].second);
    }
}

TEST_CASE("conjugacy classes of 2I match the reference table") {
    const auto classes = conjugacy_classes(ade_group("2I"));
    REQUIRE(classes.size() == 9);
    size_t total = 0;
    for (const auto& c : classes) total += c.size;
    CHECK(total == 120);

    const std::pair<AlgScalar, size_t> expected[] = {
        {AlgScalar(1), 1},     {kQuarterPlus, 12},  {kHalf, 20},
        {-kQuarterMinus, 12},  {AlgScalar(0), 30},  {kQuarterMinus, 12},
        {-kHalf, 20},          {-kQuarterPlus, 12}, {AlgScalar(-1), 1}};
    for (size_t i = 0; i < 9; ++i) {
        CHECK(classes[i].real_part == expected[i].first);
        CHECK(classes[i].size == expected[i].second);
    }
}

TEST_CASE("named elements land in the expected classes") {
    // 2O: s = (1+i+j+k)/2, t = e^{i pi/4}; the two real-part-0 classes are
    // C(t^2) (size 6, the imaginary units) and C(st) (size 12).
    {
        const auto classes = conjugacy_classes(ade_group("2O"));
        const auto index = class_key_index(classes);
        const UnitQuaternion s = parse_quaternion("1/2+1/2*i+1/2*j+1/2*k");
        const UnitQuaternion t = parse_quaternion("1/2*sqrt(2)+1/2*sqrt(2)*i");
        CHECK(classes[index.at({"1/2", 8})].members.count(s) == 1);
        CHECK(classes[index.at({"1/2*sqrt(2)", 6})].members.count(t) == 1);
        CHECK(classes[index.at({"0", 6})].members.count(t * t) == 1);
        CHECK(classes[index.at({"-1/2*sqrt(2)", 6})].members.count(t * t * t) == 1);
        CHECK(classes[index.at({"0", 12})].members.count(s * t) == 1);
        CHECK(classes[index.at({"-1/2", 8})].members.count(s * s) == 1);
    }
    // 2I: s = (1+i+j+k)/2 has order 6, t = (phi + phi^-1 i + j)/2 order 10.
    {
        const auto classes = conjugacy_classes(ade_group("2I"));
        const auto index = class_key_index(classes);
        const UnitQuaternion s = parse_quaternion("1/2+1/2*i+1/2*j+1/2*k");
        const UnitQuaternion t = parse_quaternion("(1/4+1/4*sqrt(5))+(-1/4+1/4*sqrt(5))*i+1/2*j");
        CHECK(classes[index.at({kQuarterPlus.str(), 12})].members.count(t) == 1);
        CHECK(classes[index.at({(-kQuarterMinus).str(), 12})].members.count(t * t) == 1);
        CHECK(classes[index.at({kQuarterMinus.str(), 12})].members.count(t * t * t) == 1);
        CHECK(classes[index.at({(-kQuarterPlus).str(), 12})].members.count(t * t * t * t) == 1);
        CHECK(classes[index.at({"1/2", 20})].members.count(s) == 1);
        CHECK(classes[index.at({"-1/2", 20})].members.count(s * s * s * s) == 1);
        CHECK(classes[index.at({"0", 30})].members.count(s * t) == 1);
    }
}

TEST_CASE("abelian groups have singleton classes") {
    const auto classes = conjugacy_classes(ade_group("Z4"));
    REQUIRE(classes.size() == 4);
    for (const auto& c : classes) CHECK(c.size == 1);
}

TEST_CASE("su2_almost_conjugate") {
    const FiniteQuatGroup bt = ade_group("2T");
    CHECK(su2_almost_conjugate(bt, bt));
    CHECK_FALSE(su2_almost_conjugate(ade_group("2D4"), ade_group("Z8")));
    for (int iter = 0; iter < 10; ++iter) {
        const UnitQuaternion g = random_unit_quaternion();
        CHECK(su2_almost_conjugate(bt.conjugated_by(g), bt));
    }
}

TEST_CASE("equal real-part multisets imply conjugate ADE groups") {
    // The catalog of exactly realizable ADE groups; the only equal-order,
    // equal-real-multiset pairs are conjugate copies of the same abstract
    // group (Z4 and 2D2, both cyclic of order 4 on different axes).
    const char* labels[] = {"Z1", "Z2", "Z3", "Z4",  "Z5",  "Z6", "Z8", "Z10",
                            "2D2", "2D4", "2D6", "2D8", "2D10", "2T", "2O", "2I"};
    std::vector<FiniteQuatGroup> catalog;
    for (const char* l : labels) catalog.push_back(ade_group(l));

    const FiniteQuatGroup bo = ade_group("2O");
    const FiniteQuatGroup bi = ade_group("2I");
    for (size_t a = 0; a < catalog.size(); ++a) {
        for (size_t b = a + 1; b < catalog.size(); ++b) {
            if (!su2_almost_conjugate(catalog[a], catalog[b])) continue;
            // must be conjugate: scan 2O and 2I for a witness
            bool witness = false;
            for (const FiniteQuatGroup* pool : {&bo, &bi}) {
                for (const UnitQuaternion& g : pool->elements()) {
                    if (catalog[a].conjugated_by(g) == catalog[b]) {
                        witness = true;
                        break;
                    }
                }
                if (witness) break;
            }
            CHECK_MESSAGE(witness, *catalog[a].label(), " vs ", *catalog[b].label());
        }
    }

    CHECK(su2_almost_conjugate(ade_group("Z4"), ade_group("2D2")));
}

TEST_CASE("outer involution of 2O") {
    const FiniteQuatGroup bo = ade_group("2O");
    const GroupAutomorphism phi = outer_automorphism(bo);
    const UnitQuaternion s = parse_quaternion("1/2+1/2*i+1/2*j+1/2*k");
    const UnitQuaternion t = parse_quaternion("1/2*sqrt(2)+1/2*sqrt(2)*i");
    CHECK(phi(s) == s);
    CHECK(phi(t) == -t);
    CHECK(outer_action(bo, t) == -t);
    CHECK_THROWS_AS(
        outer_action(bo, parse_quaternion("(1/4+1/4*sqrt(5))+(-1/4+1/4*sqrt(5))*i+1/2*j")),
        std::invalid_argument);

    // Class action: fixes every class except swapping the two with real
    // parts +-1/sqrt2; involutive on classes.
    const auto classes = conjugacy_classes(bo);
    const auto rows = class_action(bo);
    REQUIRE(rows.size() == 8);
    const auto index = class_key_index(classes);
    const size_t plus = index.at({"1/2*sqrt(2)", 6});
    const size_t minus = index.at({"-1/2*sqrt(2)", 6});
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i == plus) {
            CHECK(rows[i].image_class_index == minus);
            CHECK(rows[i].image_real_part.str() == "-1/2*sqrt(2)");
        } else if (i == minus) {
            CHECK(rows[i].image_class_index == plus);
            CHECK(rows[i].image_real_part.str() == "1/2*sqrt(2)");
        } else {
            CHECK(rows[i].image_class_index == i);
        }
        CHECK(rows[rows[i].image_class_index].image_class_index == i);  // involution
    }
}

TEST_CASE("outer involution of 2I") {
    const FiniteQuatGroup bi = ade_group("2I");
    const GroupAutomorphism psi = outer_automorphism(bi);
    const UnitQuaternion s = parse_quaternion("1/2+1/2*i+1/2*j+1/2*k");
    const UnitQuaternion t = parse_quaternion("(1/4+1/4*sqrt(5))+(-1/4+1/4*sqrt(5))*i+1/2*j");
    CHECK(psi(s) == s);
    // psi(t) = (-phi^-1 - phi*i + k)/2
    CHECK(psi(t) == parse_quaternion("(1/4-1/4*sqrt(5))-(1/4+1/4*sqrt(5))*i+1/2*k"));
    // Real(psi(t^2)) = -(1+sqrt5)/4
    CHECK(psi(t * t).real_part() == -kQuarterPlus);

    const auto classes = conjugacy_classes(bi);
    const auto rows = class_action(bi);
    REQUIRE(rows.size() == 9);
    const auto index = class_key_index(classes);
    const size_t ct = index.at({kQuarterPlus.str(), 12});       // C(t)
    const size_t ct2 = index.at({(-kQuarterMinus).str(), 12});  // C(t^2)
    const size_t ct3 = index.at({kQuarterMinus.str(), 12});     // C(t^3)
    const size_t ct4 = index.at({(-kQuarterPlus).str(), 12});   // C(t^4)
    CHECK(rows[ct].image_class_index == ct3);
    CHECK(rows[ct3].image_class_index == ct);
    CHECK(rows[ct2].image_class_index == ct4);
    CHECK(rows[ct4].image_class_index == ct2);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i == ct || i == ct2 || i == ct3 || i == ct4) continue;
        CHECK(rows[i].image_class_index == i);
    }
}

TEST_CASE("action of 2O/{+-1} on the imaginary units: all 24 rows") {
    const auto rows = bo_action_on_bd4();
    REQUIRE(rows.size() == 24);
    std::map<UnitQuaternion, std::array<std::string, 3>> got;
    for (const auto& row : rows)
        got[row.coset_representative] = {row.image_i.str(), row.image_j.str(), row.image_k.str()};

    const char* table[][4] = {
        {"1", "i", "j", "k"},
        {"i", "i", "-j", "-k"},
        {"j", "-i", "j", "-k"},
        {"k", "-i", "-j", "k"},
        {"1/2+1/2*i+1/2*j+1/2*k", "j", "k", "i"},
        {"1/2-1/2*i-1/2*j-1/2*k", "k", "i", "j"},
        {"1/2+1/2*i-1/2*j-1/2*k", "-j", "k", "-i"},
        {"1/2+1/2*i+1/2*j-1/2*k", "-k", "i", "-j"},
        {"1/2-1/2*i+1/2*j-1/2*k", "-j", "-k", "i"},
        {"1/2-1/2*i-1/2*j+1/2*k", "j", "-k", "-i"},
        {"1/2-1/2*i+1/2*j+1/2*k", "-k", "-i", "j"},
        {"1/2+1/2*i-1/2*j+1/2*k", "k", "-i", "-j"},
        {"1/2*sqrt(2)+1/2*sqrt(2)*i", "i", "k", "-j"},
        {"1/2*sqrt(2)-1/2*sqrt(2)*i", "i", "-k", "j"},
        {"1/2*sqrt(2)*j+1/2*sqrt(2)*k", "-i", "k", "j"},
        {"1/2*sqrt(2)*j-1/2*sqrt(2)*k", "-i", "-k", "-j"},
        {"1/2*sqrt(2)*i+1/2*sqrt(2)*k", "k", "-j", "i"},
        {"1/2*sqrt(2)-1/2*sqrt(2)*k", "-j", "i", "k"},
        {"1/2*sqrt(2)*i-1/2*sqrt(2)*k", "-k", "-j", "-i"},
        {"1/2*sqrt(2)*i+1/2*sqrt(2)*j", "j", "i", "-k"},
        {"1/2*sqrt(2)+1/2*sqrt(2)*j", "-k", "j", "i"},
        {"1/2*sqrt(2)-1/2*sqrt(2)*j", "k", "j", "-i"},
        {"1/2*sqrt(2)+1/2*sqrt(2)*k", "j", "-i", "k"},
        {"1/2*sqrt(2)*i-1/2*sqrt(2)*j", "-j", "-i", "-k"},
    };
    for (const auto& row : table) {
        const UnitQuaternion q = parse_quaternion(row[0]);
        const UnitQuaternion canon = std::min(q, -q);
        REQUIRE_MESSAGE(got.count(canon) == 1, "missing coset ", row[0]);
        const auto& images = got.at(canon);
        CHECK_MESSAGE(images[0] == row[1], "coset ", row[0]);
        CHECK_MESSAGE(images[1] == row[2], "coset ", row[0]);
        CHECK_MESSAGE(images[2] == row[3], "coset ", row[0]);
    }
}
