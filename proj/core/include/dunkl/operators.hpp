#pragma once

#include "dunkl/polynomial.hpp"
#include "dunkl/structure.hpp"

namespace dunkl {

/// Dunkl operator T_j: partial derivative plus the reflection difference term
///   T_j p = d_j p + sum_roots kappa_a a_j (p - p o r_a) / <a, x>.
/// For the sign-change group only the root sqrt(2) e_j contributes to T_j and
/// the difference quotient is an exact coordinate division.
Polynomial dunkl_apply(const DunklStructure& s, int j, const Polynomial& p);

/// Dunkl Laplacian sum_j T_j^2.
Polynomial dunkl_laplacian(const DunklStructure& s, const Polynomial& p);

/// Gaussian-conjugated operator T_j - x_j.  Multiplying by e^{-|x|^2/2}
/// intertwines it with T_j acting on p(x) e^{-|x|^2/2}, which lets the
/// harmonic-oscillator Hamiltonian act symbolically on such products.
Polynomial dunkl_twisted_apply(const DunklStructure& s, int j, const Polynomial& p);

/// Fischer-type pairing [p, q] = (p*(T) q)(0), conjugate-linear in the first
/// argument (the first argument's coefficients are conjugated).  Homogeneous
/// polynomials of different degrees pair to exactly zero.
Complex dunkl_pairing(const DunklStructure& s, const Polynomial& p, const Polynomial& q);

/// Oscillator Hamiltonian -(Delta_k p - |x|^2 p)/2 applied symbolically to
/// p(x) e^{-|x|^2/2}; returns the polynomial factor of the result.
Polynomial oscillator_apply_gaussian(const DunklStructure& s, const Polynomial& p);

}  // namespace dunkl
