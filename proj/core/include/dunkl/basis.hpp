#pragma once

#include "dunkl/operators.hpp"
#include "dunkl/polynomial.hpp"
#include "dunkl/structure.hpp"

#include <map>
#include <span>
#include <vector>

namespace dunkl {

/// Orthonormal polynomial basis under the Fischer-type pairing, together with
/// the generalized Hermite polynomials and Hermite functions built on it.
///
/// Construction runs modified Gram--Schmidt degree by degree on monomials in
/// graded-lex order, with one reorthogonalization pass; a loss of
/// orthogonality beyond 1e-8 aborts with the offending degree.  For the
/// sign-change group the monomials are already orthogonal, so the procedure
/// reduces to normalization, but the code does not assume that.
class HermiteBasis {
 public:
  /// Technical cap on the degree (keeps pairing norms within double range
  /// with plenty of margin).
  static constexpr int kDegreeCap = 88;

  HermiteBasis(const DunklStructure& s, int max_degree);

  const DunklStructure& structure() const { return *s_; }
  int max_degree() const { return max_degree_; }

  /// All multi-indices with |nu| <= max_degree in graded-lex order.
  const std::vector<Exponents>& indices() const { return indices_; }

  /// Orthonormal polynomial phi_nu.
  const Polynomial& phi(const Exponents& nu) const;

  /// Generalized Hermite polynomial
  ///   H_nu = 2^{|nu|} sum_{l <= |nu|/2} (-1)^l / (2^{2l} l!) Delta^l phi_nu,
  /// evaluated as the finite symbolic sum (no recurrence).
  const Polynomial& hermite(const Exponents& nu) const;

  /// Hermite function h_nu(x) = 2^{-|nu|/2} e^{-|x|^2/2} H_nu(x).
  double hermite_function(const Exponents& nu, std::span<const double> x) const;
  Complex hermite_function_c(const Exponents& nu, std::span<const Complex> x) const;

  /// Oscillator eigenvalue check: applies -(Delta_k - |x|^2)/2 symbolically to
  /// H_nu e^{-|x|^2/2} and extracts the best-fit eigenvalue plus the relative
  /// coefficient residual.  The expected eigenvalue is |nu| + gamma + n/2.
  struct EigenCheck {
    double eigenvalue;
    double residual;
  };
  EigenCheck oscillator_eigencheck(const Exponents& nu) const;
  double eigenvalue_of(const Exponents& nu) const {
    return nu.total_degree() + s_->gamma() + 0.5 * s_->dimension();
  }

  /// Number of multi-indices of total degree d in n variables.
  static std::size_t level_count(int n, int d);

 private:
  void check_index(const Exponents& nu) const;

  const DunklStructure* s_;
  int max_degree_;
  std::vector<Exponents> indices_;
  std::map<Exponents, Polynomial, GradedLex> phi_;
  std::map<Exponents, Polynomial, GradedLex> hermite_;
};

}  // namespace dunkl
