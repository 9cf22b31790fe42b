#include "dunkl/operators.hpp"

namespace dunkl {

Polynomial dunkl_apply(const DunklStructure& s, int j, const Polynomial& p) {
  if (j < 0 || j >= s.dimension())
    throw std::invalid_argument("dunkl_apply: coordinate index out of range");
  Polynomial r = p.derivative(j);
  const double kappa = s.multiplicity(j);
  if (kappa != 0.0) {
    // (p - p o r_j) keeps only terms odd in x_j, so the division is exact.
    Polynomial diff = p;
    diff -= p.sign_flip(j);
    if (!diff.is_zero()) r += kappa * Complex{1.0, 0.0} * diff.divide_coordinate(j);
  }
  return r;
}

Polynomial dunkl_laplacian(const DunklStructure& s, const Polynomial& p) {
  Polynomial r(p.vars() == 0 ? s.dimension() : p.vars());
  for (int j = 0; j < s.dimension(); ++j) r += dunkl_apply(s, j, dunkl_apply(s, j, p));
  return r;
}

Polynomial dunkl_twisted_apply(const DunklStructure& s, int j, const Polynomial& p) {
  Polynomial r = dunkl_apply(s, j, p);
  r -= p.shift_coordinate(j, 1);
  return r;
}

Complex dunkl_pairing(const DunklStructure& s, const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return 0.0;
  Complex sum = 0.0;
  for (const auto& [ex, c] : p.terms()) {
    // Apply T^ex to q and read the constant term.
    Polynomial t = q;
    for (int j = 0; j < s.dimension() && !t.is_zero(); ++j)
      for (int rep = 0; rep < ex[j] && !t.is_zero(); ++rep) t = dunkl_apply(s, j, t);
    sum += std::conj(c) * t.coefficient(Exponents{});
  }
  return sum;
}

Polynomial oscillator_apply_gaussian(const DunklStructure& s, const Polynomial& p) {
  Polynomial acc(p.vars() == 0 ? s.dimension() : p.vars());
  for (int j = 0; j < s.dimension(); ++j)
    acc += dunkl_twisted_apply(s, j, dunkl_twisted_apply(s, j, p));
  for (int j = 0; j < s.dimension(); ++j) acc -= p.shift_coordinate(j, 2);
  acc *= Complex{-0.5, 0.0};
  return acc;
}

}  // namespace dunkl
