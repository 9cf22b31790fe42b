#include "dunkl/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

using CLD = std::complex<long double>;

constexpr double kSeriesRadius = 30.0;
constexpr long double kPi = std::numbers::pi_v<long double>;

long double b_coeff(double kappa, int m) {
  return static_cast<long double>(m) +
         ((m & 1) ? 2.0L * static_cast<long double>(kappa) : 0.0L);
}

Complex series_eval(double kappa, Complex u) {
  const CLD lu(u.real(), u.imag());
  const long double mag = std::abs(lu);
  CLD term = 1.0L;
  CLD sum = 1.0L;
  for (int m = 1; m <= 400; ++m) {
    term *= lu / b_coeff(kappa, m);
    sum += term;
    if (static_cast<long double>(m) > mag &&
        std::abs(term) < 1e-21L * (1.0L + std::abs(sum))) {
      break;
    }
  }
  return Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

long double series_eval_real(double kappa, long double u) {
  long double term = 1.0L;
  long double sum = 1.0L;
  const long double mag = std::fabs(u);
  for (int m = 1; m <= 400; ++m) {
    term *= u / b_coeff(kappa, m);
    sum += term;
    if (static_cast<long double>(m) > mag && std::fabs(term) < 1e-21L * (1.0L + std::fabs(sum))) {
      break;
    }
  }
  return sum;
}

/// Asymptotic sums for the modified Bessel function of order beta:
///   s_minus = sum_m (-1)^m a_m w^{-m},  s_plus = sum_m a_m w^{-m},
///   a_m = prod_{i<=m} (4 beta^2 - (2i-1)^2) / (8 i).
/// Truncated at the smallest term (the series terminate for half-odd beta).
void bessel_asym_sums(double beta, CLD w, CLD& s_minus, CLD& s_plus) {
  const CLD invw = 1.0L / w;
  const long double b2 = 4.0L * static_cast<long double>(beta) * static_cast<long double>(beta);
  CLD term = 1.0L;
  s_minus = 1.0L;
  s_plus = 1.0L;
  long double prev_mag = 1e30L;
  for (int m = 1; m <= 60; ++m) {
    const long double odd = static_cast<long double>(2 * m - 1);
    term *= invw * ((b2 - odd * odd) / (8.0L * m));
    const long double mag = std::abs(term);
    if (mag > prev_mag) break;
    s_minus += ((m & 1) ? -term : term);
    s_plus += term;
    if (mag < 1e-24L) break;
    prev_mag = mag;
  }
}

long double bessel_asym_s_minus_real(double beta, long double w) {
  const long double b2 = 4.0L * static_cast<long double>(beta) * static_cast<long double>(beta);
  long double term = 1.0L;
  long double sum = 1.0L;
  long double prev_mag = 1e30L;
  for (int m = 1; m <= 60; ++m) {
    const long double odd = static_cast<long double>(2 * m - 1);
    // (-1)^m a_m w^{-m} accumulates the factor (odd^2 - b2) / (8 m w).
    term *= (odd * odd - b2) / (8.0L * m * w);
    const long double mag = std::fabs(term);
    if (mag > prev_mag) break;
    sum += term;
    if (mag < 1e-24L) break;
    prev_mag = mag;
  }
  return sum;
}

/// Large-argument evaluation through the closed Bessel form
///   e_kappa(u) = Gamma(kappa + 1/2) (w/2)^{1/2 - kappa}
///                  [I_{kappa - 1/2}(w) +/- I_{kappa + 1/2}(w)],
/// w = +/- u taken in the closed right half-plane, with the two-exponential
/// uniform asymptotics for each Bessel factor.
Complex asym_eval(double kappa, Complex u) {
  const bool flip = u.real() < 0.0;
  const CLD w = flip ? CLD(-u.real(), -u.imag()) : CLD(u.real(), u.imag());

  CLD s1a, s2a, s1b, s2b;
  bessel_asym_sums(kappa - 0.5, w, s1a, s2a);
  bessel_asym_sums(kappa + 0.5, w, s1b, s2b);

  // I_{kappa-1/2} +/- I_{kappa+1/2}; the subdominant exponentials carry the
  // phase e^{i s kappa pi} (s = sign of Im w) and e^{i s (kappa+1) pi} = -that.
  const long double s = (w.imag() >= 0.0L) ? 1.0L : -1.0L;
  const CLD phase = std::exp(CLD(0.0L, s * static_cast<long double>(kappa) * kPi));
  const CLD grow = flip ? s1a - s1b : s1a + s1b;
  const CLD decay = phase * (flip ? s2a + s2b : s2a - s2b);

  const CLD pref = 1.0L / std::sqrt(2.0L * kPi * w);
  const CLD amp = std::tgammal(static_cast<long double>(kappa) + 0.5L) *
                  std::pow(w / 2.0L, CLD(0.5L - static_cast<long double>(kappa)));
  const CLD val = amp * pref * (std::exp(w) * grow + std::exp(-w) * decay);
  return Complex(static_cast<double>(val.real()), static_cast<double>(val.imag()));
}

double norm2(std::span<const Complex> z) {
  double s = 0.0;
  for (const Complex& c : z) s += std::norm(c);
  return std::sqrt(s);
}

void check_rank(const DunklStructure& s, std::size_t zs, std::size_t ws) {
  if (zs != static_cast<std::size_t>(s.dimension()) ||
      ws != static_cast<std::size_t>(s.dimension())) {
    throw std::invalid_argument("kernel arguments must match the structure rank");
  }
}

}  // namespace

Complex rank1_kernel_value(double kappa, Complex u) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("rank-1 kernel: multiplicity must be finite and >= 0");
  }
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) {
    throw std::invalid_argument("rank-1 kernel: non-finite argument");
  }
  if (std::abs(u) <= kSeriesRadius) return series_eval(kappa, u);
  return asym_eval(kappa, u);
}

double rank1_kernel_scaled(double kappa, double u) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("rank-1 kernel: multiplicity must be finite and >= 0");
  }
  if (!(u >= 0.0) || !std::isfinite(u)) {
    throw std::invalid_argument("scaled rank-1 kernel requires finite u >= 0");
  }
  if (u <= kSeriesRadius) {
    const long double lu = static_cast<long double>(u);
    return static_cast<double>(std::expl(-lu) * series_eval_real(kappa, lu));
  }
  // e^{-u} I_beta(u) ~ S_minus(beta, u) / sqrt(2 pi u); the second exponential
  // is below e^{-60} here and is dropped.
  const long double w = static_cast<long double>(u);
  const long double s1a = bessel_asym_s_minus_real(kappa - 0.5, w);
  const long double s1b = bessel_asym_s_minus_real(kappa + 0.5, w);
  const long double amp = std::tgammal(static_cast<long double>(kappa) + 0.5L) *
                          std::powl(w / 2.0L, 0.5L - static_cast<long double>(kappa));
  return static_cast<double>(amp / std::sqrtl(2.0L * kPi * w) * (s1a + s1b));
}

Complex kernel_product(const DunklStructure& s, std::span<const Complex> z,
                       std::span<const Complex> w) {
  check_rank(s, z.size(), w.size());
  Complex prod = 1.0;
  for (int j = 0; j < s.dimension(); ++j) {
    prod *= rank1_kernel_value(s.multiplicity(j), z[static_cast<std::size_t>(j)] *
                                                      w[static_cast<std::size_t>(j)]);
  }
  return prod;
}

Complex kernel_product_real(const DunklStructure& s, std::span<const double> z,
                            std::span<const double> w) {
  check_rank(s, z.size(), w.size());
  Complex prod = 1.0;
  for (int j = 0; j < s.dimension(); ++j) {
    prod *= rank1_kernel_value(s.multiplicity(j),
                               Complex(z[static_cast<std::size_t>(j)] *
                                       w[static_cast<std::size_t>(j)]));
  }
  return prod;
}

KernelSeries::Value KernelSeries::eval(std::span<const Complex> z,
                                       std::span<const Complex> w) const {
  const DunklStructure& s = basis_->structure();
  check_rank(s, z.size(), w.size());
  const double r = norm2(z) * norm2(w);
  const auto tail = [r](int completed) {
    // (|z| |w|)^{d+1} / (d+1)! for the tail beyond degree `completed`.
    const double d1 = completed + 1.0;
    return std::exp(d1 * std::log(r) - std::lgamma(d1 + 1.0));
  };

  CLD acc = 0.0L;
  int completed = -1;
  const auto& idx = basis_->indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Complex pz = basis_->phi(idx[i]).eval(z);
    const Complex pw = basis_->phi(idx[i]).eval(w);
    const Complex t = pz * pw;
    acc += CLD(t.real(), t.imag());
    const int d = idx[i].total_degree();
    const bool degree_done = (i + 1 == idx.size()) || (idx[i + 1].total_degree() != d);
    if (degree_done) {
      completed = d;
      if (tail(completed) < 1e-18 * (1.0 + std::abs(acc))) break;
    }
  }
  Value out;
  out.value = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  out.truncation_bound = tail(completed);
  return out;
}

Complex KernelSeries::eval_checked(std::span<const Complex> z, std::span<const Complex> w,
                                   double tol) const {
  const Value v = eval(z, w);
  if (!(v.truncation_bound <= tol)) {
    std::ostringstream msg;
    msg << "kernel series truncation bound " << v.truncation_bound
        << " exceeds tolerance " << tol << "; raise the basis degree or shrink the arguments";
    throw std::domain_error(msg.str());
  }
  return v.value;
}

PairingCheck gaussian_pairing(const DunklStructure& s, Complex delta,
                              std::span<const Complex> z, std::span<const Complex> w,
                              int points_per_axis) {
  check_rank(s, z.size(), w.size());
  if (!(delta.real() > 0.0)) {
    throw std::invalid_argument("gaussian pairing requires Re(delta) > 0");
  }
  const int n = s.dimension();
  const double eta = delta.imag();

  QuadratureRule rule(s.multiplicities(), delta.real(), points_per_axis);
  const Complex quad = rule.integrate([&](std::span<const double> x) {
    Complex val = 1.0;
    double r2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const std::size_t ju = static_cast<std::size_t>(j);
      val *= rank1_kernel_value(s.multiplicity(j), x[ju] * z[ju]);
      val *= rank1_kernel_value(s.multiplicity(j), x[ju] * w[ju]);
      r2 += x[ju] * x[ju];
    }
    return val * std::exp(Complex(0.0, -eta * r2));
  });

  Complex lz = 0.0, lw = 0.0;
  for (int j = 0; j < n; ++j) {
    const std::size_t ju = static_cast<std::size_t>(j);
    lz += z[ju] * z[ju];
    lw += w[ju] * w[ju];
  }
  const Complex half_inv = 1.0 / (2.0 * delta);
  std::vector<Complex> zs(z.begin(), z.end());
  for (Complex& c : zs) c *= half_inv;
  const double nu0 = s.gamma() + 0.5 * n;
  const Complex closed = s.c_inv() * std::pow(2.0 * delta, -nu0) *
                         std::exp((lz + lw) * half_inv * 0.5) * kernel_product(s, zs, w);

  PairingCheck out;
  out.quadrature = quad;
  out.closed_form = closed;
  return out;
}

BoundFit kernel_bound_fit(
    const DunklStructure& s,
    std::span<const std::pair<std::vector<double>, std::vector<double>>> pairs) {
  BoundFit fit;
  fit.constant = 1.0;
  const int n = s.dimension();
  for (const auto& [x, y] : pairs) {
    check_rank(s, x.size(), y.size());
    double dist2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double d = x[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(j)];
      dist2 += d * d;
    }
    if (dist2 > kBoundSeparation * kBoundSeparation) {
      throw std::invalid_argument("near-diagonal bound sample exceeds the admissible separation");
    }
    // Per coordinate: e^{-(x_j^2 + y_j^2)/2} e_kappa(x_j y_j), computed via the
    // scaled kernel when x_j y_j >= 0 so distant samples do not overflow.
    double q = 1.0;
    for (int j = 0; j < n; ++j) {
      const std::size_t ju = static_cast<std::size_t>(j);
      const double u = x[ju] * y[ju];
      if (u >= 0.0) {
        const double diff = x[ju] - y[ju];
        q *= rank1_kernel_scaled(s.multiplicity(j), u) * std::exp(-0.5 * diff * diff);
      } else {
        q *= static_cast<double>(series_eval_real(s.multiplicity(j), u)) *
             std::exp(-0.5 * (x[ju] * x[ju] + y[ju] * y[ju]));
      }
    }
    q *= s.ball_volume(x, 1.0);

    BoundSample sample;
    sample.x = x;
    sample.y = y;
    sample.sandwiched = q;
    fit.samples.push_back(std::move(sample));
    fit.constant = std::max(fit.constant, std::max(q, 1.0 / q));
  }
  return fit;
}

}  // namespace dunkl
