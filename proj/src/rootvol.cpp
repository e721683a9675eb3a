#include "isospec/rootvol.hpp"

#include <algorithm>
#include <numeric>

namespace isospec {

RationalPoly RationalPoly::constant(const Rational& c, size_t nvars) {
    RationalPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

RationalPoly RationalPoly::linear_form(const std::vector<Rational>& coeffs) {
    RationalPoly p(coeffs.size());
    for (size_t v = 0; v < coeffs.size(); ++v) {
        std::vector<int> exps(coeffs.size(), 0);
        exps[v] = 1;
        p.add_term(exps, coeffs[v]);
    }
    return p;
}

void RationalPoly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational RationalPoly::constant_term() const {
    return coefficient(std::vector<int>(nvars_, 0));
}

Rational RationalPoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

int RationalPoly::degree() const {
    int deg = 0;
    for (const auto& [exps, c] : terms_)
        deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
    return deg;
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
    if (p.nvars_ != q.nvars_) throw std::invalid_argument("RationalPoly: variable count mismatch");
    RationalPoly out = p;
    for (const auto& [exps, c] : q.terms_) out.add_term(exps, c);
    return out;
}

RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) {
    if (p.nvars_ != q.nvars_) throw std::invalid_argument("RationalPoly: variable count mismatch");
    RationalPoly out(p.nvars_);
    for (const auto& [e1, c1] : p.terms_) {
        for (const auto& [e2, c2] : q.terms_) {
            std::vector<int> exps(p.nvars_);
            for (size_t v = 0; v < p.nvars_; ++v) exps[v] = e1[v] + e2[v];
            out.add_term(exps, c1 * c2);
        }
    }
    return out;
}

RationalPoly RationalPoly::operator*(const Rational& c) const {
    RationalPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * c);
    return out;
}

RationalPoly RationalPoly::second_partial(size_t mu, size_t nu) const {
    RationalPoly out(nvars_);
    for (const auto& [exps, c] : terms_) {
        std::vector<int> e = exps;
        Rational factor = c;
        if (e[mu] == 0) continue;
        factor *= e[mu];
        --e[mu];
        if (e[nu] == 0) continue;
        factor *= e[nu];
        --e[nu];
        out.add_term(e, factor);
    }
    return out;
}

RationalPoly LaplaceOp::apply(const RationalPoly& p) const {
    RationalPoly out(p.nvars());
    for (size_t mu = 0; mu < coeff.size(); ++mu)
        for (size_t nu = 0; nu < coeff.size(); ++nu)
            out = out + p.second_partial(mu, nu) * (-coeff[mu][nu]);
    return out;
}

RationalPoly delta_poly(const GroupDatum& g) {
    RationalPoly out = RationalPoly::constant(1, static_cast<size_t>(g.rank));
    for (const auto& root : g.positive_roots) {
        const RationalPoly alpha = RationalPoly::linear_form(root);
        out = out * alpha * alpha;
    }
    return out;
}

LaplaceOp laplace_op(const GroupDatum& g) {
    return LaplaceOp{g.gram_binv};
}

Rational gaussian_eval(const RationalPoly& p, const LaplaceOp& op) {
    Rational total = 0;
    RationalPoly q = p;
    Rational factor = 1;  // (-1/4)^k / k!
    for (int k = 0; !q.is_zero(); ++k) {
        if (k > 0) factor *= Rational(-1, 4 * k);
        total += factor * q.constant_term();
        q = op.apply(q);
    }
    return total;
}

SymVolume vol_group(const GroupDatum& g) {
    if ((g.rank + g.dim) % 2 != 0)
        throw unsupported_form_error("vol_group: pi exponent (rank+dim)/2 is not an integer for " +
                                     g.name);
    const Rational gauss = gaussian_eval(delta_poly(g), laplace_op(g));
    const SymReal denom = g.lattice_gram_det.sqrt() * SymReal(gauss);
    const Rational numer = Rational(int_pow(2, static_cast<unsigned>(g.rank)) * g.weyl_order);
    return {SymReal(numer) / denom, static_cast<unsigned>((g.rank + g.dim) / 2)};
}

SymVolume vol_flag_quotient(const GroupDatum& g) {
    if ((g.dim - g.rank) % 2 != 0)
        throw unsupported_form_error("vol_flag_quotient: pi exponent is not an integer for " +
                                     g.name);
    const Rational gauss = gaussian_eval(delta_poly(g), laplace_op(g));
    return {SymReal(Rational(g.weyl_order) / gauss),
            static_cast<unsigned>((g.dim - g.rank) / 2)};
}

SymVolume vol_homogeneous(const GroupDatum& g, const GroupDatum& k) {
    return vol_group(g) / vol_group(k);
}

std::pair<SymVolume, SymVolume> heat_invariants(const SymVolume& vol, const Rational& kappa) {
    return {vol, vol * (kappa / 6)};
}

namespace groups {

namespace {
Rational r(long num, long den = 1) {
    return Rational(num, den);
}
}  // namespace

GroupDatum su2_factor() {
    GroupDatum g;
    g.name = "SU(2)";
    g.rank = 1;
    g.dim = 3;
    g.weyl_order = 2;
    g.positive_roots = {{r(2)}};
    g.gram_binv = {{r(3, 2)}};
    g.lattice_gram_det = SymReal(r(3, 8));
    return g;
}

GroupDatum su3() {
    GroupDatum g;
    g.name = "SU(3)";
    g.rank = 2;
    g.dim = 8;
    g.weyl_order = 6;
    // eps1 - eps2, 2*eps1 + eps2, eps1 + 2*eps2 (third coordinate eliminated
    // via eps3 = -eps1 - eps2).
    g.positive_roots = {{r(1), r(-1)}, {r(2), r(1)}, {r(1), r(2)}};
    g.gram_binv = {{r(4, 3), r(-2, 3)}, {r(-2, 3), r(4, 3)}};
    g.lattice_gram_det = SymReal(r(4, 3));
    return g;
}

GroupDatum sp2() {
    GroupDatum g;
    g.name = "Sp(2)";
    g.rank = 2;
    g.dim = 10;
    g.weyl_order = 8;
    g.positive_roots = {{r(2), r(0)}, {r(0), r(2)}, {r(1), r(-1)}, {r(1), r(1)}};
    g.gram_binv = {{r(2), r(0)}, {r(0), r(2)}};
    g.lattice_gram_det = SymReal(r(4));
    return g;
}

GroupDatum u1_sp1() {
    GroupDatum g;
    g.name = "U(1)xSp(1)";
    g.rank = 2;
    g.dim = 4;
    g.weyl_order = 2;
    g.positive_roots = {{r(0), r(2)}};
    g.gram_binv = {{r(2), r(0)}, {r(0), r(2)}};
    g.lattice_gram_det = SymReal(r(16));
    return g;
}

GroupDatum su2_cubed() {
    GroupDatum g;
    g.name = "SU(2)^3";
    g.rank = 3;
    g.dim = 9;
    g.weyl_order = 8;
    g.positive_roots = {{r(2), r(0), r(0)}, {r(0), r(2), r(0)}, {r(0), r(0), r(2)}};
    g.gram_binv = {{r(3, 2), r(0), r(0)}, {r(0), r(3, 2), r(0)}, {r(0), r(0), r(3, 2)}};
    g.lattice_gram_det = SymReal(r(27, 512));
    return g;
}

GroupDatum diag_su2() {
    GroupDatum g;
    g.name = "Diag SU(2)";
    g.rank = 1;
    g.dim = 3;
    g.weyl_order = 2;
    g.positive_roots = {{r(2)}};
    g.gram_binv = {{r(1, 2)}};
    g.lattice_gram_det = SymReal(r(1, 128));
    return g;
}

GroupDatum torus(int rank) {
    GroupDatum g;
    g.name = "T^" + std::to_string(rank);
    g.rank = rank;
    g.dim = rank;
    g.weyl_order = 1;
    g.gram_binv.assign(static_cast<size_t>(rank), std::vector<Rational>(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) g.gram_binv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    g.lattice_gram_det = SymReal(1);
    return g;
}

}  // namespace groups

}  // namespace isospec
