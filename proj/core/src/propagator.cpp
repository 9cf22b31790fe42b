#include "dunkl/propagator.hpp"

#include "dunkl/kernel.hpp"
#include "dunkl/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dunkl {

namespace {

double norm2_real(std::span<const double> x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return s;
}

Complex kernel_value_impl(const DunklStructure& s, std::span<const double> x,
                          std::span<const double> y, Complex pref, double inv_scale,
                          double phase_coeff) {
  // pref * e^{i phase_coeff (|x|^2+|y|^2)} E(-i inv_scale x, y)
  const int n = s.dimension();
  std::vector<Complex> zx(static_cast<std::size_t>(n)), zy(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const std::size_t ju = static_cast<std::size_t>(j);
    zx[ju] = Complex(0.0, -inv_scale * x[ju]);
    zy[ju] = Complex(y[ju]);
  }
  const double r2 = norm2_real(x) + norm2_real(y);
  return pref * std::exp(Complex(0.0, phase_coeff * r2)) * kernel_product(s, zx, zy);
}

Complex oscillator_kernel_raw(const DunklStructure& s, std::span<const double> x,
                              std::span<const double> y, double t) {
  const double st = std::sin(t);
  const double cot = std::cos(t) / st;
  const double nu0 = s.gamma() + 0.5 * s.dimension();
  return kernel_value_impl(s, x, y, std::pow(Complex(0.0, st), -nu0), 1.0 / st,
                           0.5 * cot);
}

Complex free_kernel_raw(const DunklStructure& s, std::span<const double> x,
                        std::span<const double> y, double t) {
  const double nu0 = s.gamma() + 0.5 * s.dimension();
  return kernel_value_impl(s, x, y, std::pow(Complex(0.0, t), -nu0), 1.0 / t,
                           0.5 / t);
}

/// Closed image of the ground Gaussian through the pairing identity:
///   pref e^{i phase_coeff |x|^2} (2 delta)^{-nu0} e^{l(z)/(4 delta)},
/// z = -i inv_scale x, delta = 1/2 - i phase_coeff.
Complex gaussian_image(const DunklStructure& s, std::span<const double> x,
                       Complex pref, double inv_scale, double phase_coeff) {
  const double nu0 = s.gamma() + 0.5 * s.dimension();
  const double x2 = norm2_real(x);
  const Complex delta(0.5, -phase_coeff);
  const Complex lz(-inv_scale * inv_scale * x2);
  return pref * std::pow(2.0 * delta, -nu0) *
         std::exp(Complex(0.0, phase_coeff * x2) + lz / (4.0 * delta));
}

}  // namespace

FockVector SpectralPropagator::apply(const FockVector& f, double t) const {
  FockVector out(*basis_);
  const auto& idx = basis_->indices();
  const auto coeffs = f.coefficients();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.set_coefficient(idx[i], eigenphase(idx[i].total_degree(), t) * coeffs[i]);
  }
  return out;
}

Complex SpectralPropagator::eigenphase(int d, double t) const {
  const DunklStructure& s = basis_->structure();
  return std::polar(1.0, -t * (d + s.gamma() + 0.5 * s.dimension()));
}

CoherentImageReport coherent_image(const HermiteBasis& basis,
                                   std::span<const Complex> z, double t) {
  const DunklStructure& s = basis.structure();
  const double nu0 = s.gamma() + 0.5 * s.dimension();
  const CoherentState state(basis, z, Complex(1.0));
  const SpectralPropagator prop(basis);
  const FockVector propagated = prop.apply(state.h_coefficients(), t);

  CoherentImageReport rep;
  rep.spectral_label = std::polar(1.0, -t);
  rep.spectral_constant = std::polar(1.0, -t * nu0);
  rep.alternative_label = std::polar(1.0, t);
  rep.alternative_constant =
      s.c() * s.c() * std::pow(Complex(0.0, 1.0) * std::polar(1.0, t), -nu0);

  // Reference coefficients c F_{lambda z}: c lambda^{|nu|} phi_nu(z).
  const auto& idx = basis.indices();
  const auto base = state.h_coefficients().coefficients();
  const auto prop_coeffs = propagated.coefficients();
  long double num = 0.0L, den = 0.0L;
  Complex lpow = 1.0;
  int ldeg = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (ldeg < idx[i].total_degree()) {
      lpow *= rep.spectral_label;
      ++ldeg;
    }
    const Complex ref = rep.spectral_constant * lpow * base[i];
    num += static_cast<long double>(std::norm(prop_coeffs[i] - ref));
    den += static_cast<long double>(std::norm(prop_coeffs[i]));
  }
  rep.spectral_residual =
      std::sqrt(static_cast<double>(num) / std::max(1e-300, static_cast<double>(den)));

  // Fitted pair: constant from the degree-0 coefficient, label from the
  // largest degree-1 coefficient.
  rep.fitted_constant = prop_coeffs[0] / base[0];
  rep.fitted_label = rep.spectral_label;
  double best = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i].total_degree() != 1) continue;
    if (std::abs(base[i]) > best) {
      best = std::abs(base[i]);
      rep.fitted_label = prop_coeffs[i] / (rep.fitted_constant * base[i]);
    }
  }
  rep.alternative_label_deviation = std::abs(rep.fitted_label - rep.alternative_label);
  rep.alternative_constant_deviation =
      std::abs(rep.fitted_constant - rep.alternative_constant);
  return rep;
}

KernelPropagator::KernelPropagator(const DunklStructure& s, Flow flow,
                                   int points_per_axis)
    : s_(&s), flow_(flow), points_(points_per_axis) {
  if (points_per_axis < 2) {
    throw std::invalid_argument("kernel propagator needs at least 2 points per axis");
  }
}

void KernelPropagator::check_time(double t) const {
  if (!std::isfinite(t)) throw std::invalid_argument("non-finite propagation time");
  if (flow_ == Flow::oscillator) {
    const double pi = std::numbers::pi;
    const double dist = std::abs(t - pi * std::round(t / pi));
    if (dist < kMinTimeSeparation) {
      std::ostringstream msg;
      msg << "oscillator kernel is singular near multiples of pi; |t - pi m| = "
          << dist << " < " << kMinTimeSeparation;
      throw std::invalid_argument(msg.str());
    }
  } else if (std::abs(t) < 1e-9) {
    throw std::invalid_argument(
        "free kernel time too small; use the closed Gaussian image for the t -> 0 limit");
  }
}

Complex KernelPropagator::kernel_value(std::span<const double> x,
                                       std::span<const double> y, double t) const {
  check_time(t);
  return flow_ == Flow::oscillator ? oscillator_kernel_raw(*s_, x, y, t)
                                   : free_kernel_raw(*s_, x, y, t);
}

Complex KernelPropagator::propagate(
    const std::function<Complex(std::span<const double>)>& f, double t,
    std::span<const double> x) const {
  check_time(t);
  QuadratureRule rule(s_->multiplicities(), 0.5, points_);
  const Complex integral = rule.integrate([&](std::span<const double> y) {
    const Complex kv = flow_ == Flow::oscillator ? oscillator_kernel_raw(*s_, x, y, t)
                                                 : free_kernel_raw(*s_, x, y, t);
    return kv * f(y) * std::exp(0.5 * norm2_real(y));
  });
  return s_->c() * integral;
}

Complex KernelPropagator::propagate_gaussian_closed(double t,
                                                    std::span<const double> x) const {
  check_time(t);
  const double nu0 = s_->gamma() + 0.5 * s_->dimension();
  if (flow_ == Flow::oscillator) {
    const double st = std::sin(t);
    const double cot = std::cos(t) / st;
    return gaussian_image(*s_, x, std::pow(Complex(0.0, st), -nu0), 1.0 / st,
                          0.5 * cot);
  }
  return gaussian_image(*s_, x, std::pow(Complex(0.0, t), -nu0), 1.0 / t, 0.5 / t);
}

Complex KernelPropagator::fitted_spectral_constant() const {
  const double t0 = 0.7;
  std::vector<double> x0(static_cast<std::size_t>(s_->dimension()), 0.4);
  const auto gaussian = [](std::span<const double> y) {
    double r2 = 0.0;
    for (double c : y) r2 += c * c;
    return Complex(std::exp(-0.5 * r2));
  };
  const Complex quad = propagate(gaussian, t0, x0);
  Complex reference;
  if (flow_ == Flow::oscillator) {
    const double nu0 = s_->gamma() + 0.5 * s_->dimension();
    reference = std::polar(1.0, -t0 * nu0) * std::exp(-0.5 * norm2_real(x0));
  } else {
    reference = propagate_gaussian_closed(t0, x0);
  }
  return quad / reference;
}

RelationCheck kernel_relation_check(const DunklStructure& s, std::span<const double> x,
                                    std::span<const double> y, double s_param) {
  if (!(std::abs(s_param) >= KernelPropagator::kMinTimeSeparation)) {
    throw std::invalid_argument("kernel relation requires |s| >= 1e-3");
  }
  const double t = std::atan(s_param);
  const double nu0 = s.gamma() + 0.5 * s.dimension();
  const double stretch = std::sqrt(1.0 + s_param * s_param);
  std::vector<double> xs(x.begin(), x.end());
  for (double& c : xs) c *= stretch;

  RelationCheck out;
  out.lhs = oscillator_kernel_raw(s, x, y, t);
  out.rhs = s.c_inv() * std::pow(1.0 + s_param * s_param, 0.5 * nu0) *
            std::exp(Complex(0.0, -0.5 * s_param * norm2_real(x))) *
            free_kernel_raw(s, xs, y, s_param);
  return out;
}

double relation_constant(const DunklStructure& s) { return s.c(); }

}  // namespace dunkl
