#pragma once

#include "dunkl/basis.hpp"

#include <span>

namespace dunkl {

/// Two independently computed values of the same quantity; callers compare.
struct SideBySide {
  Complex series;
  Complex closed_form;
};

/// Generating function of the generalized Hermite polynomials:
///   sum_nu H_nu(z) phi_nu(w)  vs  e^{-l(w)} E(2z, w),
/// l(w) = sum w_j^2.  The series runs over the basis degrees; the closed form
/// goes through the rank-1 product kernel.
SideBySide generating_function_check(const HermiteBasis& basis,
                                     std::span<const Complex> z,
                                     std::span<const Complex> w);

/// Mehler formula: for |r| < 1 and real x, y,
///   sum_nu H_nu(x) H_nu(y) 2^{-|nu|} r^{|nu|}
///     vs  (1-r^2)^{-(gamma+n/2)} e^{-r^2(|x|^2+|y|^2)/(1-r^2)} E(2rx/(1-r^2), y),
/// principal branch for the fractional power.
SideBySide mehler_eval(const HermiteBasis& basis, Complex r,
                       std::span<const double> x, std::span<const double> y);

}  // namespace dunkl
