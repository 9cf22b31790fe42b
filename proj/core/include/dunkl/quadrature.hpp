#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace dunkl {

/// Gauss rule for the one-dimensional weight 2^kappa |t|^{2 kappa} e^{-beta t^2}
/// on the real line.  The 2^kappa factor matches the reflection-group weight
/// |<sqrt(2) e_j, x>|^{2 kappa} used by the multivariate rules, so tensor
/// products of these rules integrate against the full weight directly.
struct GaussRule1D {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive
  double kappa = 0.0;
  double beta = 1.0;

  std::size_t size() const { return nodes.size(); }
};

/// Builds the m-point rule.  Recurrence coefficients of the orthogonal
/// polynomials for |t|^{2 kappa} e^{-t^2} are known in closed form
/// (b_j = j/2 for even j, j/2 + kappa for odd j, zero diagonal by symmetry);
/// nodes and weights come from the symmetric tridiagonal eigenproblem and are
/// rescaled to the requested Gaussian decay beta.
GaussRule1D gauss_rule_1d(double kappa, double beta, int m);

/// Tensor-product rule over n coordinates for the weight
/// w(x) e^{-beta |x|^2}, w(x) = prod_j 2^{kappa_j} |x_j|^{2 kappa_j}.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> kappa, double beta, int points_per_axis);

  int dimension() const { return static_cast<int>(axes_.size()); }
  double gaussian_scale() const { return beta_; }
  /// Polynomial exactness degree per coordinate (2m - 1).
  int exact_degree() const { return exact_degree_; }
  std::size_t size() const { return total_; }
  const GaussRule1D& axis(int j) const { return axes_[static_cast<std::size_t>(j)]; }

  /// Integrates f against the full weight.  The callback receives the node
  /// coordinates; non-finite values abort with the offending node in the
  /// message.
  std::complex<double> integrate(
      const std::function<std::complex<double>(std::span<const double>)>& f) const;
  double integrate_real(const std::function<double(std::span<const double>)>& f) const;

  /// Iterates nodes without materializing the tensor grid: calls
  /// visit(node_coords, weight) in a fixed deterministic order.
  void for_each_node(
      const std::function<void(std::span<const double>, double)>& visit) const;

 private:
  std::vector<GaussRule1D> axes_;
  double beta_;
  int exact_degree_;
  std::size_t total_;
};

/// Composite Gauss--Legendre integration of f over [a, b] split at the given
/// interior breakpoints, with pts nodes per panel.  Used for integrands with
/// known feature locations (kinks, scale transitions) where a graded panel
/// layout restores fast convergence.
double panel_integrate(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> breakpoints, int pts);

/// Nodes and weights of the pts-point Gauss--Legendre rule on [-1, 1].
void legendre_rule(int pts, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace dunkl
