#include "isospec/rootvol.hpp"

#include "doctest.h"

using namespace isospec;

namespace {

Rational r(long num, long den = 1) {
    return Rational(num, den);
}

// b^{-1}(alpha, alpha) straight from the Gram matrix.
Rational gram_norm(const GroupDatum& g, const std::vector<Rational>& alpha) {
    Rational out = 0;
    for (size_t i = 0; i < alpha.size(); ++i)
        for (size_t j = 0; j < alpha.size(); ++j) out += alpha[i] * g.gram_binv[i][j] * alpha[j];
    return out;
}

const GroupDatum kAll[] = {groups::su2_factor(), groups::su3(),       groups::sp2(),
                           groups::u1_sp1(),     groups::su2_cubed(), groups::diag_su2()};

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const RationalPoly x = RationalPoly::linear_form({r(1), r(0)});
    const RationalPoly y = RationalPoly::linear_form({r(0), r(1)});
    const RationalPoly p = (x + y) * (x + y * r(-1));  // x^2 - y^2
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 2}) == -1);
    CHECK(p.coefficient({1, 1}) == 0);
    CHECK(p.degree() == 2);
    CHECK(p.second_partial(0, 0).constant_term() == 2);
    CHECK(p.second_partial(1, 1).constant_term() == -2);
    CHECK((p * p).degree() == 4);
}

TEST_CASE("delta polynomial of su(3) equals the printed expansion") {
    const RationalPoly delta = delta_poly(groups::su3());
    const std::pair<std::vector<int>, long> expected[] = {
        {{6, 0}, 4},  {{5, 1}, 12}, {{4, 2}, -3}, {{3, 3}, -26},
        {{2, 4}, -3}, {{1, 5}, 12}, {{0, 6}, 4}};
    CHECK(delta.terms().size() == 7);
    for (const auto& [exps, coeff] : expected) CHECK(delta.coefficient(exps) == coeff);
}

TEST_CASE("delta polynomial of sp(2) equals 16 t1^2 t2^2 (t1^2 - t2^2)^2") {
    const RationalPoly t1 = RationalPoly::linear_form({r(1), r(0)});
    const RationalPoly t2 = RationalPoly::linear_form({r(0), r(1)});
    const RationalPoly diff = t1 * t1 + t2 * t2 * r(-1);
    const RationalPoly expected = t1 * t1 * t2 * t2 * diff * diff * r(16);
    CHECK(delta_poly(groups::sp2()) == expected);
}

TEST_CASE("delta polynomial of su(2) is 4x^2") {
    const RationalPoly delta = delta_poly(groups::diag_su2());
    CHECK(delta.terms().size() == 1);
    CHECK(delta.coefficient({2}) == 4);
}

TEST_CASE("-Delta(alpha^2) = 2 b^{-1}(alpha, alpha) for every shipped root") {
    for (const GroupDatum& g : kAll) {
        const LaplaceOp op = laplace_op(g);
        for (const auto& root : g.positive_roots) {
            const RationalPoly alpha = RationalPoly::linear_form(root);
            const RationalPoly image = op.apply(alpha * alpha);
            CHECK(image.degree() == 0);
            CHECK(-image.constant_term() == 2 * gram_norm(g, root));
        }
    }
}

TEST_CASE("gaussian evaluation pins") {
    CHECK(gaussian_eval(delta_poly(groups::su3()), laplace_op(groups::su3())) == 12);
    CHECK(gaussian_eval(delta_poly(groups::sp2()), laplace_op(groups::sp2())) == 192);
    const RationalPoly q = RationalPoly::constant(r(7, 3), 2);
    CHECK(gaussian_eval(q, laplace_op(groups::sp2())) == r(7, 3));
    for (const GroupDatum& g : kAll)
        CHECK(gaussian_eval(delta_poly(g), laplace_op(g)) > 0);
}

TEST_CASE("rank-1 closed form: e^{-Delta/4} x^{2k} = b(x,x)^k (2k)!/(4^k k!)") {
    for (const GroupDatum& g : {groups::su2_factor(), groups::diag_su2()}) {
        const LaplaceOp op = laplace_op(g);
        const Rational b = g.gram_binv[0][0];
        const RationalPoly x = RationalPoly::linear_form({r(1)});
        RationalPoly power = RationalPoly::constant(r(1), 1);
        for (int k = 0; k <= 6; ++k) {
            const Rational expected = rational_pow(b, static_cast<unsigned>(k)) *
                                      Rational(factorial(static_cast<unsigned>(2 * k)),
                                               int_pow(4, static_cast<unsigned>(k)) *
                                                   factorial(static_cast<unsigned>(k)));
            CHECK(gaussian_eval(power, op) == expected);
            // odd powers vanish
            CHECK(gaussian_eval(power * x, op) == 0);
            power = power * x * x;
        }
    }
}

TEST_CASE("Gram data checks") {
    const GroupDatum su3 = groups::su3();
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j)
            CHECK(su3.gram_binv[i][j] == 2 * (Rational(i == j ? 1 : 0) - r(1, 3)));

    // b(H_mu, H_nu) = (3/2)(delta - 1/3) transports to b^{-1}(eps_mu, eps_nu)
    // through the pairing matrix M[mu][nu] = eps_mu(H_nu).
    const Rational bH[2][2] = {{r(1), r(-1, 2)}, {r(-1, 2), r(1)}};
    const Rational det = bH[0][0] * bH[1][1] - bH[0][1] * bH[1][0];
    const Rational inv[2][2] = {{bH[1][1] / det, -bH[0][1] / det},
                                {-bH[1][0] / det, bH[0][0] / det}};
    const Rational M[2][2] = {{r(0), r(-1)}, {r(1), r(0)}};  // eps_mu(H_nu)
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            Rational v = 0;
            for (size_t a = 0; a < 2; ++a)
                for (size_t b = 0; b < 2; ++b) v += M[i][a] * inv[a][b] * M[j][b];
            CHECK(v == su3.gram_binv[i][j]);
        }
    }

    const GroupDatum sp2 = groups::sp2();
    CHECK(sp2.gram_binv[0][0] == 2);
    CHECK(sp2.gram_binv[1][1] == 2);
    CHECK(sp2.gram_binv[0][1] == 0);

    // B(Delta H, Delta H) = 2 and B^{-1}(Delta x, Delta x) = 1/2.
    const GroupDatum diag = groups::diag_su2();
    CHECK(diag.gram_binv[0][0] == r(1, 2));
    CHECK(Rational(1) / diag.gram_binv[0][0] == 2);
}

TEST_CASE("volume pins") {
    CHECK(vol_flag_quotient(groups::su3()) == SymVolume(SymReal(r(1, 2)), 3));
    CHECK(vol_group(groups::sp2()) == SymVolume(SymReal(r(1, 12)), 6));
    CHECK(vol_group(groups::u1_sp1()) == SymVolume(SymReal(r(1, 2)), 3));
    CHECK(vol_homogeneous(groups::sp2(), groups::u1_sp1()) == SymVolume(SymReal(r(1, 6)), 3));
    // 32 sqrt2 pi^2
    CHECK(vol_group(groups::diag_su2()) == SymVolume(SymReal(r(32), 2), 2));
    // vol(SU(2)^3)^{1/3} = 8 sqrt2 pi^2 / (3 sqrt3) = (8/9) sqrt6 pi^2
    const SymVolume su2_vol = vol_group(groups::su2_factor());
    CHECK(su2_vol == SymVolume(SymReal(r(8, 9), 6), 2));
    CHECK(vol_group(groups::su2_cubed()) == su2_vol * su2_vol * su2_vol);
    CHECK(vol_group(groups::su2_cubed()) == SymVolume(SymReal(r(1024, 243), 6), 6));
    // vol(S^3 x S^3) = 32 pi^4 / (81 sqrt3) = (32/243) sqrt3 pi^4
    CHECK(vol_homogeneous(groups::su2_cubed(), groups::diag_su2()) ==
          SymVolume(SymReal(r(32, 243), 3), 4));
}

TEST_CASE("torus conventions") {
    // no roots: empty product, flag quotient is 1
    CHECK(vol_flag_quotient(groups::torus(2)) == SymVolume(SymReal(1), 0));
    // G / {1} = G
    for (const GroupDatum& g : kAll)
        CHECK(vol_homogeneous(g, groups::torus(0)) == vol_group(g));
    // vol(T^r) = (2 pi)^r for the unit lattice
    CHECK(vol_group(groups::torus(2)) == SymVolume(SymReal(4), 2));
}

TEST_CASE("vol_group = vol_flag_quotient * (2 pi)^rank / sqrt(lattice det)") {
    for (const GroupDatum& g : kAll) {
        const SymVolume torus_vol{SymReal(Rational(int_pow(2, static_cast<unsigned>(g.rank)))) /
                                      g.lattice_gram_det.sqrt(),
                                  static_cast<unsigned>(g.rank)};
        CHECK(vol_group(g) == vol_flag_quotient(g) * torus_vol);
    }
}

TEST_CASE("unsupported forms are rejected") {
    GroupDatum odd;
    odd.name = "odd";
    odd.rank = 1;
    odd.dim = 2;
    odd.weyl_order = 1;
    odd.gram_binv = {{r(1)}};
    CHECK_THROWS_AS(vol_group(odd), unsupported_form_error);
    // negative pi exponent in a quotient
    CHECK_THROWS_AS(vol_homogeneous(groups::su2_factor(), groups::sp2()),
                    unsupported_form_error);
}

TEST_CASE("heat invariants") {
    const SymVolume vol(SymReal(r(1, 6)), 3);
    auto [a0, a1] = heat_invariants(vol, r(30));
    CHECK(a0 == vol);
    CHECK(a1 == SymVolume(SymReal(r(5, 6)), 3));
    CHECK(heat_invariants(vol, r(0)).second == SymVolume());
    CHECK(heat_invariants(vol, r(6)).second == vol);
}

TEST_CASE("metric rescaling law on volumes") {
    // In dimension six a metric scale s multiplies volumes by s^3; the
    // table's normalization factor is the s = 30/kappa case.
    const SymVolume base(SymReal(r(8, 81), 4), 4);
    const Rational kappa(12);
    const Rational s = Rational(30) / kappa;
    CHECK(base.rescale_metric(s, 6) == base * (s * s * s));
    for (const GroupDatum& g : kAll) {
        const SymVolume v = vol_group(g);
        CHECK(v.rescale_metric(r(4), 6) == v * r(64));
    }
}
