#include "dunkl/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dunkl {

namespace {

/// Multi-indices of total degree d in n variables, graded-lex order.
void level_indices(int n, int d, std::vector<Exponents>& out) {
  Exponents ex{};
  // Lexicographic enumeration via recursion on the first coordinate.
  struct Rec {
    int n;
    std::vector<Exponents>& out;
    void run(Exponents& ex, int pos, int remaining) {
      if (pos == n - 1) {
        ex[pos] = remaining;
        out.push_back(ex);
        ex[pos] = 0;
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        ex[pos] = v;
        run(ex, pos + 1, remaining - v);
      }
      ex[pos] = 0;
    }
  } rec{n, out};
  rec.run(ex, 0, d);
}

}  // namespace

std::size_t HermiteBasis::level_count(int n, int d) {
  // C(d + n - 1, n - 1)
  std::size_t num = 1, den = 1;
  for (int i = 1; i < n; ++i) {
    num *= static_cast<std::size_t>(d + i);
    den *= static_cast<std::size_t>(i);
  }
  return num / den;
}

HermiteBasis::HermiteBasis(const DunklStructure& s, int max_degree)
    : s_(&s), max_degree_(max_degree) {
  if (max_degree < 0 || max_degree > kDegreeCap)
    throw std::invalid_argument("HermiteBasis: max degree must lie in [0, " +
                                std::to_string(kDegreeCap) + "]");
  const int n = s.dimension();

  for (int d = 0; d <= max_degree_; ++d) {
    std::vector<Exponents> level;
    level_indices(n, d, level);

    // Seed with monomials normalized by their own pairing norm, then run
    // modified Gram--Schmidt with a single reorthogonalization pass.
    std::vector<Polynomial> q;
    q.reserve(level.size());
    for (const Exponents& nu : level) {
      Polynomial v = Polynomial::monomial(n, nu, 1.0);
      const double nrm2 = dunkl_pairing(s, v, v).real();
      if (!(nrm2 > 0.0))
        throw std::runtime_error("HermiteBasis: monomial with nonpositive pairing norm");
      v *= Complex{1.0 / std::sqrt(nrm2), 0.0};

      for (int pass = 0; pass < 2; ++pass)
        for (const Polynomial& prev : q) {
          const Complex proj = dunkl_pairing(s, prev, v);
          if (proj != 0.0) v -= proj * prev;
        }
      const double rem2 = dunkl_pairing(s, v, v).real();
      if (!(rem2 > 1e-16))
        throw std::runtime_error(
            "HermiteBasis: loss of orthogonality beyond 1e-8 at degree " +
            std::to_string(d));
      v *= Complex{1.0 / std::sqrt(rem2), 0.0};
      q.push_back(v);
    }

    for (std::size_t i = 0; i < level.size(); ++i) {
      indices_.push_back(level[i]);
      phi_.emplace(level[i], q[i]);
    }
  }

  // Generalized Hermite polynomials as the finite exponential-of-Laplacian
  // sum applied to each phi_nu.
  for (const Exponents& nu : indices_) {
    const int d = nu.total_degree();
    Polynomial term = phi_.at(nu);
    Polynomial sum(n);
    double coeff = std::pow(2.0, d);  // 2^{|nu|} / (4^l l!) with alternating sign
    int sign = 1;
    for (int l = 0; l <= d / 2; ++l) {
      if (l > 0) {
        term = dunkl_laplacian(*s_, term);
        coeff /= 4.0 * l;
        sign = -sign;
        if (term.is_zero()) break;
      }
      sum += (sign > 0 ? coeff : -coeff) * Complex{1.0, 0.0} * term;
    }
    hermite_.emplace(nu, sum);
  }
}

void HermiteBasis::check_index(const Exponents& nu) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (nu[i] < 0 || (i >= s_->dimension() && nu[i] != 0))
      throw std::invalid_argument("HermiteBasis: multi-index outside variable range");
  if (nu.total_degree() > max_degree_)
    throw std::invalid_argument("HermiteBasis: degree " +
                                std::to_string(nu.total_degree()) +
                                " beyond configured cutoff " + std::to_string(max_degree_));
}

const Polynomial& HermiteBasis::phi(const Exponents& nu) const {
  check_index(nu);
  return phi_.at(nu);
}

const Polynomial& HermiteBasis::hermite(const Exponents& nu) const {
  check_index(nu);
  return hermite_.at(nu);
}

double HermiteBasis::hermite_function(const Exponents& nu,
                                      std::span<const double> x) const {
  const Polynomial& h = hermite(nu);
  double n2 = 0.0;
  for (double xi : x) n2 += xi * xi;
  return std::pow(2.0, -0.5 * nu.total_degree()) * std::exp(-0.5 * n2) *
         h.eval_real(x);
}

Complex HermiteBasis::hermite_function_c(const Exponents& nu,
                                         std::span<const Complex> x) const {
  const Polynomial& h = hermite(nu);
  Complex n2 = 0.0;
  for (Complex xi : x) n2 += xi * xi;
  return std::pow(2.0, -0.5 * nu.total_degree()) * std::exp(-0.5 * n2) * h.eval(x);
}

HermiteBasis::EigenCheck HermiteBasis::oscillator_eigencheck(const Exponents& nu) const {
  const Polynomial& h = hermite(nu);
  const Polynomial q = oscillator_apply_gaussian(*s_, h);

  // Best-fit eigenvalue in the coefficient inner product, then the relative
  // residual of q - lambda h.
  Complex num = 0.0;
  double den = 0.0;
  for (const auto& [ex, c] : h.terms()) {
    num += std::conj(c) * q.coefficient(ex);
    den += std::norm(c);
  }
  const Complex lambda = num / den;
  Polynomial r = q;
  r -= lambda * h;
  EigenCheck out;
  out.eigenvalue = lambda.real();
  out.residual = r.coefficient_norm() / h.coefficient_norm();
  return out;
}

}  // namespace dunkl
