#pragma once

#include "dunkl/basis.hpp"

#include <functional>
#include <span>
#include <vector>

namespace dunkl {

/// Coefficient vector over the multi-indices of a basis, used on both sides
/// of the chaotic transform: a function sum_nu a_nu h_nu on the weighted L^2
/// side, or sum_nu a_nu phi_nu on the Fock side.  The transform acts as the
/// identity on coefficients, which is exactly the content of the identity
/// C(h_nu) = phi_nu that the quadrature checks certify.
///
/// The inner product is sum_nu a_nu conj(b_nu), conjugate-linear in the
/// second slot.
class FockVector {
 public:
  explicit FockVector(const HermiteBasis& basis);

  const HermiteBasis& basis() const { return *basis_; }

  Complex coefficient(const Exponents& nu) const;
  void set_coefficient(const Exponents& nu, Complex a);

  std::span<const Complex> coefficients() const { return coeff_; }

  double norm() const;
  Complex inner_product(const FockVector& other) const;

  /// sum a_nu phi_nu(z) (Fock-side view).
  Complex eval_fock(std::span<const Complex> z) const;
  /// sum a_nu h_nu(x) (weighted-L^2-side view).
  Complex eval_h(std::span<const double> x) const;

 private:
  const HermiteBasis* basis_;
  std::vector<Complex> coeff_;  // aligned with basis().indices()
};

/// Chaotic transform of a pointwise function: coefficient at nu is
///   N int h_nu(x) f(x) w(x) dx
/// computed by the tensor Gauss rule at Gaussian scale 1, where N is the
/// structure's L^2 normalizer.  f must be Gaussian-dominated.  Coefficients
/// are filled for |nu| <= max_degree (capped by the basis degree).
FockVector chaotic_transform(const HermiteBasis& basis,
                             const std::function<Complex(std::span<const double>)>& f,
                             int points_per_axis, int max_degree);

/// Coherent state F_{wz}: h-expansion coefficients phi_nu(z) w^{|nu|},
/// pointwise form e^{-(l(wz) + |x|^2)/2} E(sqrt(2) wz, x).  Construction
/// rejects labels whose coefficient tail beyond the basis degree exceeds
/// 1e-14 relative to the squared norm E(wz, conj(wz)).
class CoherentState {
 public:
  CoherentState(const HermiteBasis& basis, std::span<const Complex> z, Complex w);

  const std::vector<Complex>& label() const { return z_; }
  Complex scale() const { return w_; }

  Complex coefficient(const Exponents& nu) const { return coeff_.coefficient(nu); }
  const FockVector& h_coefficients() const { return coeff_; }

  /// Defining closed form.
  Complex eval_pointwise(std::span<const double> x) const;
  /// Truncated coefficient sum sum_nu a_nu h_nu(x).
  Complex eval_series(std::span<const double> x) const;

  /// Squared L^2 norm, closed form E(wz, conj(wz)).
  double norm_squared_closed() const;
  /// Relative coefficient tail bound beyond the basis degree.
  double tail_bound() const { return tail_bound_; }

 private:
  std::vector<Complex> z_;
  Complex w_;
  FockVector coeff_;
  double tail_bound_;
};

/// Weak resolution-of-identity check: for truncated coefficient inputs f, g
/// (h-expansions), compares the Fock-side pairing of the chaotic transforms
/// of the pointwise functions against the direct weighted integral
///   N int f conj(g) w dx.
struct ResolutionCheck {
  Complex transform_side;
  Complex integral_side;
};
ResolutionCheck resolution_check(const HermiteBasis& basis, const FockVector& f,
                                 const FockVector& g, int points_per_axis);

}  // namespace dunkl
