#pragma once

#include "dunkl/basis.hpp"
#include "dunkl/structure.hpp"

#include <span>

namespace dunkl {

/// Trial operator gamma_eps = sum_nu eps^{2|nu|} |h_nu><h_nu|: positive,
/// self-adjoint, diagonal in the Hermite-function basis, with eigenvalue
/// eps^{2l} of multiplicity binom(l+n-1, n-1) on the degree-l eigenspace.
/// The truncation level L is chosen at build time so the spectral tail of
/// the trace is below 1e-12 relative.
class GammaEpsOperator {
 public:
  static GammaEpsOperator build(const DunklStructure& s, double epsilon);

  const DunklStructure& structure() const { return *s_; }
  double epsilon() const { return eps_; }
  int truncation_level() const { return truncation_; }

  double eigenvalue(int level) const;
  double level_multiplicity(int level) const;  // binom(level+n-1, n-1)
  double operator_norm() const { return 1.0; } // largest eigenvalue, level 0

  double trace_closed() const;                 // (1-eps^2)^{-n}
  /// Truncated Schatten sum (sum_l m_l eps^{2 r l})^{1/r}, r >= 1.
  double schatten_norm(double r) const;
  double schatten_norm_closed(double r) const; // (1-eps^{2r})^{-n/r}

 private:
  GammaEpsOperator() = default;
  const DunklStructure* s_ = nullptr;
  double eps_ = 0.0;
  int truncation_ = 0;
};

/// Density of gamma_eps (t-independent), closed Mehler form evaluated through
/// the exponentially scaled rank-1 kernel so arbitrarily large |x| and eps
/// near 1 stay in range:
///   rho(x) = (1-eps^4)^{-(gamma+n/2)} prod_j e^{-a x_j^2} ehat_j(b x_j^2),
/// a = (1-eps^2)/(1+eps^2), b = 2 eps^2/(1-eps^4).
double density_closed(const DunklStructure& s, double epsilon,
                      std::span<const double> x);

/// Spectral sum sum_{|nu| <= basis degree} eps^{2|nu|} h_nu(x)^2.
double density_spectral(const HermiteBasis& basis, double epsilon,
                        std::span<const double> x);

/// Same sum with each h_nu propagated through the oscillator flow for time t;
/// the phases are unimodular so the value is t-independent.
double density_propagated(const HermiteBasis& basis, double epsilon,
                          std::span<const double> x, double t);

/// Mixed space-time norm of the density over one time period:
///   pi^{1/q} (N int rho^p w dx)^{1/p},
/// N the structure's L^2 normalizer.  The weighted integral factorizes into
/// per-coordinate line integrals evaluated on dyadically graded panels that
/// resolve both the kernel's boundary layer at scale 1/sqrt(b) and the broad
/// Gaussian scale 1/sqrt(p a); the error estimate comes from redoing the
/// panels with more points.
struct MixedNormResult {
  double value;
  double lp_integral;              // N int rho^p w dx
  double relative_error_estimate;  // from panel refinement
};
MixedNormResult mixed_norm(const DunklStructure& s, double epsilon, double p,
                           double q);

/// N int rho w dx (the p = 1 integral); equals the trace when everything is
/// consistent.
double trace_quadrature(const DunklStructure& s, double epsilon);

}  // namespace dunkl
