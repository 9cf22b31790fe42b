#include "dunkl/hermite.hpp"

#include "dunkl/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dunkl {

namespace {
using CLD = std::complex<long double>;

CLD to_ld(Complex c) { return CLD(c.real(), c.imag()); }
Complex to_d(CLD c) {
  return Complex(static_cast<double>(c.real()), static_cast<double>(c.imag()));
}
}  // namespace

SideBySide generating_function_check(const HermiteBasis& basis,
                                     std::span<const Complex> z,
                                     std::span<const Complex> w) {
  const DunklStructure& s = basis.structure();
  const int n = s.dimension();
  if (z.size() != static_cast<std::size_t>(n) || w.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("generating function arguments must match the rank");
  }

  CLD acc = 0.0L;
  for (const Exponents& nu : basis.indices()) {
    acc += to_ld(basis.hermite(nu).eval(z)) * to_ld(basis.phi(nu).eval(w));
  }

  Complex lw = 0.0;
  std::vector<Complex> z2(z.begin(), z.end());
  for (int j = 0; j < n; ++j) {
    lw += w[static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    z2[static_cast<std::size_t>(j)] *= 2.0;
  }

  SideBySide out;
  out.series = to_d(acc);
  out.closed_form = std::exp(-lw) * kernel_product(s, z2, w);
  return out;
}

SideBySide mehler_eval(const HermiteBasis& basis, Complex r,
                       std::span<const double> x, std::span<const double> y) {
  const DunklStructure& s = basis.structure();
  const int n = s.dimension();
  if (x.size() != static_cast<std::size_t>(n) || y.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("mehler arguments must match the rank");
  }
  if (!(std::abs(r) < 1.0)) {
    throw std::invalid_argument("mehler formula requires |r| < 1");
  }

  // Series side, grouped by degree with (r/2)^d carried incrementally.
  const CLD half_r = to_ld(r) * 0.5L;
  CLD degree_factor = 1.0L;
  int current_degree = 0;
  CLD acc = 0.0L;
  for (const Exponents& nu : basis.indices()) {
    const int d = nu.total_degree();
    while (current_degree < d) {
      degree_factor *= half_r;
      ++current_degree;
    }
    const Polynomial& H = basis.hermite(nu);
    acc += static_cast<long double>(H.eval_real(x)) *
           static_cast<long double>(H.eval_real(y)) * degree_factor;
  }

  double x2 = 0.0, y2 = 0.0;
  for (int j = 0; j < n; ++j) {
    x2 += x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    y2 += y[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
  }
  const Complex r2 = r * r;
  const Complex one_minus = 1.0 - r2;
  const double nu0 = s.gamma() + 0.5 * n;
  const Complex scale = 2.0 * r / one_minus;
  std::vector<Complex> zx(static_cast<std::size_t>(n));
  std::vector<Complex> zy(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    zx[static_cast<std::size_t>(j)] = scale * x[static_cast<std::size_t>(j)];
    zy[static_cast<std::size_t>(j)] = Complex(y[static_cast<std::size_t>(j)]);
  }

  SideBySide out;
  out.series = to_d(acc);
  out.closed_form = std::pow(one_minus, -nu0) *
                    std::exp(-r2 * (x2 + y2) / one_minus) * kernel_product(s, zx, zy);
  return out;
}

}  // namespace dunkl
