#include "dunkl/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {

std::string node_string(std::span<const double> x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

GaussRule1D gauss_rule_1d(double kappa, double beta, int m) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa))
    throw std::invalid_argument("gauss_rule_1d: multiplicity must be finite and >= 0");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("gauss_rule_1d: Gaussian scale must be positive");
  if (m < 1) throw std::invalid_argument("gauss_rule_1d: need at least one point");

  // Jacobi matrix for |t|^{2 kappa} e^{-t^2}: zero diagonal, off-diagonal
  // sqrt(b_j) with b_j = j/2 + kappa for odd j and j/2 for even j.  The even
  // coefficients coincide with the plain Hermite weight; the odd ones carry
  // the |t|^{2 kappa} correction.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub(m > 1 ? m - 1 : 0);
  for (int j = 1; j < m; ++j) {
    const double bj = 0.5 * j + ((j % 2 != 0) ? kappa : 0.0);
    sub[j - 1] = std::sqrt(bj);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_rule_1d: tridiagonal eigensolve failed");

  // Total mass of |t|^{2 kappa} e^{-t^2} is Gamma(kappa + 1/2); the extra
  // 2^kappa matches the root normalization |sqrt(2) t|^{2 kappa}, and the
  // substitution t -> t / sqrt(beta) rescales to the requested decay.
  const double mass = std::pow(2.0, kappa) * std::tgamma(kappa + 0.5) *
                      std::pow(beta, -(kappa + 0.5));
  const double scale = 1.0 / std::sqrt(beta);

  GaussRule1D rule;
  rule.kappa = kappa;
  rule.beta = beta;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i] * scale;
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }

  // The weight is even, so nodes come in +/- pairs (plus 0 for odd m).
  // Symmetrize to remove the eigensolver's last-ulp asymmetry; this makes odd
  // moments vanish exactly.
  for (int i = 0, j = m - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[static_cast<std::size_t>(j)] -
                            rule.nodes[static_cast<std::size_t>(i)]);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(j)] = x;
    const double w = 0.5 * (rule.weights[static_cast<std::size_t>(i)] +
                            rule.weights[static_cast<std::size_t>(j)]);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(j)] = w;
  }
  if (m % 2 != 0) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return rule;
}

QuadratureRule::QuadratureRule(std::vector<double> kappa, double beta,
                               int points_per_axis)
    : beta_(beta), exact_degree_(2 * points_per_axis - 1), total_(1) {
  if (kappa.empty()) throw std::invalid_argument("QuadratureRule: empty multiplicity list");
  axes_.reserve(kappa.size());
  for (double k : kappa) {
    axes_.push_back(gauss_rule_1d(k, beta, points_per_axis));
    total_ *= axes_.back().size();
  }
}

void QuadratureRule::for_each_node(
    const std::function<void(std::span<const double>, double)>& visit) const {
  const int n = dimension();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < total_; ++flat) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      const auto& ax = axes_[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(j)] = ax.nodes[idx[static_cast<std::size_t>(j)]];
      w *= ax.weights[idx[static_cast<std::size_t>(j)]];
    }
    visit(x, w);
    for (int j = n - 1; j >= 0; --j) {
      auto& i = idx[static_cast<std::size_t>(j)];
      if (++i < axes_[static_cast<std::size_t>(j)].size()) break;
      i = 0;
    }
  }
}

std::complex<double> QuadratureRule::integrate(
    const std::function<std::complex<double>(std::span<const double>)>& f) const {
  std::complex<long double> acc = 0.0;
  for_each_node([&](std::span<const double> x, double w) {
    const std::complex<double> v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("QuadratureRule::integrate: non-finite integrand at node " +
                               node_string(x));
    acc += static_cast<long double>(w) * std::complex<long double>(v);
  });
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double QuadratureRule::integrate_real(
    const std::function<double(std::span<const double>)>& f) const {
  long double acc = 0.0;
  for_each_node([&](std::span<const double> x, double w) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw std::runtime_error("QuadratureRule::integrate: non-finite integrand at node " +
                               node_string(x));
    acc += static_cast<long double>(w) * v;
  });
  return static_cast<double>(acc);
}

void legendre_rule(int pts, std::vector<double>& nodes, std::vector<double>& weights) {
  if (pts < 1) throw std::invalid_argument("legendre_rule: need at least one point");
  // Jacobi matrix of the Legendre weight on [-1, 1]: zero diagonal,
  // off-diagonal j / sqrt(4 j^2 - 1).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(pts);
  Eigen::VectorXd sub(pts > 1 ? pts - 1 : 0);
  for (int j = 1; j < pts; ++j) sub[j - 1] = j / std::sqrt(4.0 * j * j - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("legendre_rule: tridiagonal eigensolve failed");
  nodes.resize(static_cast<std::size_t>(pts));
  weights.resize(static_cast<std::size_t>(pts));
  for (int i = 0; i < pts; ++i) {
    nodes[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    weights[static_cast<std::size_t>(i)] = 2.0 * v0 * v0;
  }
}

double panel_integrate(const std::function<double(double)>& f, double a, double b,
                       std::span<const double> breakpoints, int pts) {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  static thread_local std::vector<double> xs, ws;
  static thread_local int cached_pts = 0;
  if (cached_pts != pts) {
    legendre_rule(pts, xs, ws);
    cached_pts = pts;
  }

  long double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < xs.size(); ++q) {
      const double v = f(mid + half * xs[q]);
      if (!std::isfinite(v))
        throw std::runtime_error("panel_integrate: non-finite integrand");
      acc += static_cast<long double>(half * ws[q]) * v;
    }
  }
  return static_cast<double>(acc);
}

}  // namespace dunkl
