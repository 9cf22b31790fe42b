#pragma once

#include <span>
#include <vector>

namespace dunkl {

/// Hard cap on the rank; matches the polynomial engine's variable bound.
inline constexpr int kMaxRank = 4;

/// Rank-n reflection data for the sign-change group on R^n.  Positive roots
/// are sqrt(2) e_j with one nonnegative multiplicity kappa_j per coordinate;
/// the associated weight factorizes as
///   w(x) = prod_j |<sqrt(2) e_j, x>|^{2 kappa_j} = prod_j 2^{kappa_j} |x_j|^{2 kappa_j}.
///
/// Two normalization constants travel with the structure:
///  * c_inv = integral of e^{-|x|^2/2} w(x) dx, the Gaussian mass at scale 1/2
///    (c = 1/c_inv appears in the kernel pairing identities);
///  * l2_normalizer = 2^{gamma + n/2} c, the constant for which the Hermite
///    functions below are exactly orthonormal; it equals the reciprocal
///    Gaussian mass at scale 1, and all L^p norms and traces here use it.
class DunklStructure {
 public:
  static DunklStructure build(int n, std::vector<double> kappa);

  int dimension() const { return n_; }
  const std::vector<double>& multiplicities() const { return kappa_; }
  double multiplicity(int j) const { return kappa_[static_cast<std::size_t>(j)]; }
  /// Sum of all multiplicities.
  double gamma() const { return gamma_; }
  /// Homogeneity degree of the weighted volume: 2 gamma + n.
  double homogeneous_dimension() const { return 2.0 * gamma_ + n_; }

  double c() const { return c_; }
  double c_inv() const { return c_inv_; }
  double l2_normalizer() const { return l2_normalizer_; }

  /// Positive roots as coordinate vectors (row j is sqrt(2) e_j).
  const std::vector<std::vector<double>>& positive_roots() const { return roots_; }

  double weight_at(std::span<const double> x) const;

  /// Image of x under the reflection in root j (sign flip of coordinate j;
  /// exact, an involution).
  std::vector<double> reflect(int j, std::span<const double> x) const;

  /// Weighted volume of the Euclidean ball B(center, radius).  Closed form
  /// for n = 1; nested one-dimensional integration with kink-aware panels
  /// for n >= 2.
  double ball_volume(std::span<const double> center, double radius) const;

  /// Default per-axis Gauss point count used when a configuration does not
  /// specify one (denser in low rank where tensor grids are cheap).
  int default_quad_points() const { return n_ == 1 ? 80 : 48; }

 private:
  DunklStructure() = default;

  int n_ = 0;
  std::vector<double> kappa_;
  std::vector<std::vector<double>> roots_;
  double gamma_ = 0.0;
  double c_inv_ = 0.0;
  double c_ = 0.0;
  double l2_normalizer_ = 0.0;
};

}  // namespace dunkl
