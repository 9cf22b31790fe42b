#pragma once

#include "dunkl/basis.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/structure.hpp"

#include <span>
#include <vector>

namespace dunkl {

/// One-dimensional reflection-group kernel e_kappa(u) = sum_m u^m / d_m with
/// d_m = prod_{j<=m} b_j, b_j = j + 2 kappa for odd j and j for even j, so
/// that the two-variable kernel is e_kappa(u v).  Entire in u; reduces to
/// e^u at kappa = 0.
///
/// Evaluation: ascending series (extended-precision accumulation) for
/// |u| <= 30, two-exponential Bessel-type asymptotics beyond.  Values with
/// huge positive real part overflow like e^u does; use rank1_kernel_scaled
/// for those regimes.
Complex rank1_kernel_value(double kappa, Complex u);

/// Two-argument form e_kappa(u v).
inline Complex rank1_kernel(double kappa, Complex u, Complex v) {
  return rank1_kernel_value(kappa, u * v);
}

/// Exponentially scaled kernel e^{-u} e_kappa(u) for real u >= 0.  Bounded
/// (decays like u^{-kappa}); safe for arguments up to ~1e300.
double rank1_kernel_scaled(double kappa, double u);

/// Product kernel over coordinates: E(z, w) = prod_j e_{kappa_j}(z_j w_j).
Complex kernel_product(const DunklStructure& s, std::span<const Complex> z,
                       std::span<const Complex> w);
Complex kernel_product_real(const DunklStructure& s, std::span<const double> z,
                            std::span<const double> w);

/// Truncated spectral series sum_{|nu| <= N} phi_nu(z) phi_nu(w) together
/// with the reported tail bound (|z| |w|)^{N+1} / (N+1)!.
class KernelSeries {
 public:
  explicit KernelSeries(const HermiteBasis& basis) : basis_(&basis) {}

  struct Value {
    Complex value;
    double truncation_bound;
  };
  Value eval(std::span<const Complex> z, std::span<const Complex> w) const;

  /// Checked evaluation: rejects arguments whose tail bound exceeds tol.
  Complex eval_checked(std::span<const Complex> z, std::span<const Complex> w,
                       double tol = 1e-12) const;

  const HermiteBasis& basis() const { return *basis_; }

 private:
  const HermiteBasis* basis_;
};

/// Gaussian--kernel pairing identity: quadrature of
///   integral e^{-delta |x|^2} E(x, z) E(x, w) w(x) dx
/// against the closed form
///   c_inv (2 delta)^{-(gamma + n/2)} e^{(l(z) + l(w)) / (4 delta)} E(z / (2 delta), w),
/// with l(z) = sum z_j^2 and principal branches throughout.  Valid for
/// Re(delta) > 0.
struct PairingCheck {
  Complex quadrature;
  Complex closed_form;
};
PairingCheck gaussian_pairing(const DunklStructure& s, Complex delta,
                              std::span<const Complex> z, std::span<const Complex> w,
                              int points_per_axis);

/// Near-diagonal two-sided kernel bound: for sample pairs (x, y) with
/// |x - y| below the admissible separation, the quantity
///   q(x, y) = e^{-(|x|^2 + |y|^2)/2} E(x, y) w-vol(B(x, 1))
/// is sandwiched between 1/C and C for a structure-dependent constant.
/// Returns per-sample values and the fitted constant.
struct BoundSample {
  std::vector<double> x;
  std::vector<double> y;
  double sandwiched;
};
struct BoundFit {
  std::vector<BoundSample> samples;
  double constant;  // max(q, 1/q) over samples
};
BoundFit kernel_bound_fit(const DunklStructure& s,
                          std::span<const std::pair<std::vector<double>, std::vector<double>>> pairs);

/// Largest admissible separation |x - y| for the near-diagonal bound samples.
inline constexpr double kBoundSeparation = 0.5;

}  // namespace dunkl
