#pragma once

#include "isospec/symreal.hpp"

#include <map>
#include <string>
#include <vector>

namespace isospec {

// Multivariate polynomial with exact rational coefficients, sparse on
// exponent vectors. Zero coefficients are never stored.
class RationalPoly {
  public:
    explicit RationalPoly(size_t nvars = 0) : nvars_(nvars) {}
    static RationalPoly constant(const Rational& c, size_t nvars);
    // Linear form sum_v coeffs[v] * x_v.
    static RationalPoly linear_form(const std::vector<Rational>& coeffs);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    int degree() const;
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator*(const RationalPoly& p, const RationalPoly& q);
    RationalPoly operator*(const Rational& c) const;

    // d^2 / (dx_mu dx_nu)
    RationalPoly second_partial(size_t mu, size_t nu) const;

    Rational coefficient(const std::vector<int>& exponents) const;

    bool operator==(const RationalPoly& q) const = default;

  private:
    void add_term(const std::vector<int>& exps, const Rational& c);

    size_t nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

// Delta = -sum_{mu,nu} c_{mu,nu} d^2/(dx_mu dx_nu) with c the Gram matrix of
// the dual metric b^{-1}; satisfies -Delta(alpha^2) = 2 b^{-1}(alpha,alpha)
// for every linear form alpha.
struct LaplaceOp {
    std::vector<std::vector<Rational>> coeff;

    RationalPoly apply(const RationalPoly& p) const;
};

// Exact root and metric data for one compact group, transcribed per group.
// Roots are real linear forms (the i factor dropped); one representative per
// +-pair. lattice_gram_det is |det(b^{-1}(e_mu,e_nu))| over a basis of the
// character lattice of the maximal torus, which fixes vol(T).
struct GroupDatum {
    std::string name;
    int rank = 0;
    int dim = 0;
    Int weyl_order = 1;
    std::vector<std::vector<Rational>> positive_roots;
    std::vector<std::vector<Rational>> gram_binv;
    SymReal lattice_gram_det = SymReal(1);
};

// Product of the squared positive roots (the Weyl-integration Jacobian).
RationalPoly delta_poly(const GroupDatum& g);

LaplaceOp laplace_op(const GroupDatum& g);

// e^{-Delta/4}|_0 P = sum_k (-1/4)^k (Delta^k P)(0) / k!; finite since P has
// finite degree.
Rational gaussian_eval(const RationalPoly& p, const LaplaceOp& op);

// vol(G,B) = 2^rank |W| pi^{(rank+dim)/2} / (sqrt(lattice_gram_det) *
// gaussian_eval(delta)). Throws unsupported_form_error when rank+dim is odd.
SymVolume vol_group(const GroupDatum& g);

// vol(G/T, B) = |W| pi^{(dim-rank)/2} / gaussian_eval(delta).
SymVolume vol_flag_quotient(const GroupDatum& g);

// vol(G/K) = vol(G) / vol(K) for the submersion metric.
SymVolume vol_homogeneous(const GroupDatum& g, const GroupDatum& k);

// Heat invariants of a closed Einstein manifold with scalar curvature kappa:
// a0 = vol, a1 = vol * kappa / 6.
std::pair<SymVolume, SymVolume> heat_invariants(const SymVolume& vol, const Rational& kappa);

// The shipped exact data, one entry per explicitly computed case.
namespace groups {
GroupDatum su2_factor();  // SU(2), B = -(1/3) tr
GroupDatum su3();         // SU(3), B = -(1/2) tr
GroupDatum sp2();         // Sp(2), B = -(1/2) Re tr
GroupDatum u1_sp1();      // U(1) x Sp(1) in Sp(2), restricted metric
GroupDatum su2_cubed();   // SU(2)^3, B = -(1/3) tr
GroupDatum diag_su2();    // diagonal SU(2) in SU(2)^3, restricted metric
GroupDatum torus(int rank);
}  // namespace groups

}  // namespace isospec
