#include "dunkl/fock.hpp"

#include "dunkl/kernel.hpp"
#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

std::size_t index_position(const HermiteBasis& basis, const Exponents& nu) {
  const auto& idx = basis.indices();
  const auto it = std::lower_bound(idx.begin(), idx.end(), nu, GradedLex{});
  if (it == idx.end() || GradedLex{}(nu, *it)) {
    std::ostringstream msg;
    msg << "multi-index of degree " << nu.total_degree()
        << " is outside the basis degree cutoff " << basis.max_degree();
    throw std::out_of_range(msg.str());
  }
  return static_cast<std::size_t>(it - idx.begin());
}

}  // namespace

FockVector::FockVector(const HermiteBasis& basis)
    : basis_(&basis), coeff_(basis.indices().size(), Complex(0.0)) {}

Complex FockVector::coefficient(const Exponents& nu) const {
  return coeff_[index_position(*basis_, nu)];
}

void FockVector::set_coefficient(const Exponents& nu, Complex a) {
  coeff_[index_position(*basis_, nu)] = a;
}

double FockVector::norm() const {
  long double s = 0.0L;
  for (const Complex& a : coeff_) s += static_cast<long double>(std::norm(a));
  return static_cast<double>(std::sqrt(static_cast<double>(s)));
}

Complex FockVector::inner_product(const FockVector& other) const {
  if (basis_ != other.basis_) {
    throw std::invalid_argument("coefficient vectors belong to different bases");
  }
  std::complex<long double> s = 0.0L;
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    const Complex t = coeff_[i] * std::conj(other.coeff_[i]);
    s += std::complex<long double>(t.real(), t.imag());
  }
  return Complex(static_cast<double>(s.real()), static_cast<double>(s.imag()));
}

Complex FockVector::eval_fock(std::span<const Complex> z) const {
  Complex acc = 0.0;
  const auto& idx = basis_->indices();
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == Complex(0.0)) continue;
    acc += coeff_[i] * basis_->phi(idx[i]).eval(z);
  }
  return acc;
}

Complex FockVector::eval_h(std::span<const double> x) const {
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  Complex acc = 0.0;
  const auto& idx = basis_->indices();
  for (std::size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == Complex(0.0)) continue;
    const int d = idx[i].total_degree();
    acc += coeff_[i] * std::exp2(-0.5 * d) * basis_->hermite(idx[i]).eval_real(x);
  }
  return acc * std::exp(-0.5 * r2);
}

FockVector chaotic_transform(const HermiteBasis& basis,
                             const std::function<Complex(std::span<const double>)>& f,
                             int points_per_axis, int max_degree) {
  const DunklStructure& s = basis.structure();
  max_degree = std::min(max_degree, basis.max_degree());

  const auto& idx = basis.indices();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i].total_degree() <= max_degree) active.push_back(i);
  }

  std::vector<std::complex<long double>> acc(active.size(), 0.0L);
  QuadratureRule rule(s.multiplicities(), 1.0, points_per_axis);
  rule.for_each_node([&](std::span<const double> x, double weight) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    const Complex common = f(x) * (weight * std::exp(0.5 * r2));
    if (!std::isfinite(common.real()) || !std::isfinite(common.imag())) {
      throw std::domain_error(
          "chaotic transform: integrand overflowed at a quadrature node; "
          "the input is not Gaussian-dominated");
    }
    for (std::size_t a = 0; a < active.size(); ++a) {
      const Exponents& nu = idx[active[a]];
      const Complex t = common * (std::exp2(-0.5 * nu.total_degree()) *
                                  basis.hermite(nu).eval_real(x));
      acc[a] += std::complex<long double>(t.real(), t.imag());
    }
  });

  FockVector out(basis);
  for (std::size_t a = 0; a < active.size(); ++a) {
    out.set_coefficient(idx[active[a]],
                        s.l2_normalizer() * Complex(static_cast<double>(acc[a].real()),
                                                    static_cast<double>(acc[a].imag())));
  }
  return out;
}

CoherentState::CoherentState(const HermiteBasis& basis, std::span<const Complex> z,
                             Complex w)
    : z_(z.begin(), z.end()), w_(w), coeff_(basis) {
  const DunklStructure& s = basis.structure();
  if (z_.size() != static_cast<std::size_t>(s.dimension())) {
    throw std::invalid_argument("coherent-state label must match the rank");
  }

  const auto& idx = basis.indices();
  long double partial = 0.0L;
  Complex wpow = 1.0;  // w^{current degree}, advanced as the degree steps up
  int wdeg = 0;
  for (const Exponents& nu : idx) {
    while (wdeg < nu.total_degree()) {
      wpow *= w_;
      ++wdeg;
    }
    const Complex a = basis.phi(nu).eval(z_) * wpow;
    coeff_.set_coefficient(nu, a);
    partial += static_cast<long double>(std::norm(a));
  }

  // Coefficient mass: sum |phi_nu(z) w^{|nu|}|^2 = E(|w|z, conj(|w|z)).
  std::vector<Complex> wz(z_.size()), wzc(z_.size());
  const double aw = std::abs(w_);
  for (std::size_t j = 0; j < z_.size(); ++j) {
    wz[j] = aw * z_[j];
    wzc[j] = std::conj(wz[j]);
  }
  const double total = kernel_product(s, wz, wzc).real();
  tail_bound_ = std::max(0.0, (total - static_cast<double>(partial)) /
                                  std::max(1.0, total));
  if (tail_bound_ > 1e-14) {
    std::ostringstream msg;
    msg << "coherent-state coefficient tail " << tail_bound_
        << " beyond degree " << basis.max_degree()
        << " exceeds 1e-14; raise the basis degree or shrink the label";
    throw std::domain_error(msg.str());
  }
}

Complex CoherentState::eval_pointwise(std::span<const double> x) const {
  const DunklStructure& s = coeff_.basis().structure();
  Complex lwz = 0.0;
  double r2 = 0.0;
  std::vector<Complex> arg(z_.size()), xc(z_.size());
  const double sqrt2 = std::sqrt(2.0);
  for (std::size_t j = 0; j < z_.size(); ++j) {
    const Complex wz = w_ * z_[j];
    lwz += wz * wz;
    arg[j] = sqrt2 * wz;
    xc[j] = Complex(x[j]);
    r2 += x[j] * x[j];
  }
  return std::exp(-0.5 * (lwz + r2)) * kernel_product(s, arg, xc);
}

Complex CoherentState::eval_series(std::span<const double> x) const {
  return coeff_.eval_h(x);
}

double CoherentState::norm_squared_closed() const {
  const DunklStructure& s = coeff_.basis().structure();
  std::vector<Complex> wz(z_.size()), wzc(z_.size());
  for (std::size_t j = 0; j < z_.size(); ++j) {
    wz[j] = w_ * z_[j];
    wzc[j] = std::conj(wz[j]);
  }
  return kernel_product(s, wz, wzc).real();
}

ResolutionCheck resolution_check(const HermiteBasis& basis, const FockVector& f,
                                 const FockVector& g, int points_per_axis) {
  const DunklStructure& s = basis.structure();
  const auto fp = [&f](std::span<const double> x) { return f.eval_h(x); };
  const auto gp = [&g](std::span<const double> x) { return g.eval_h(x); };

  const FockVector cf = chaotic_transform(basis, fp, points_per_axis, basis.max_degree());
  const FockVector cg = chaotic_transform(basis, gp, points_per_axis, basis.max_degree());

  QuadratureRule rule(s.multiplicities(), 1.0, points_per_axis);
  const Complex integral = rule.integrate([&](std::span<const double> x) {
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return f.eval_h(x) * std::conj(g.eval_h(x)) * std::exp(r2);
  });

  ResolutionCheck out;
  out.transform_side = cf.inner_product(cg);
  out.integral_side = s.l2_normalizer() * integral;
  return out;
}

}  // namespace dunkl
