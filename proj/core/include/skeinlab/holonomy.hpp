#pragma once

#include <array>
#include <complex>

#include "skeinlab/charvar.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/mlaurent.hpp"

namespace skeinlab {

/// Edge weights and chosen square roots on the standard once-punctured-torus
/// triangulation. Edge order: 0 = horizontal, 1 = vertical, 2 = diagonal.
/// The (1,0) curve crosses edges 1 and 2; the (0,1) curve crosses 0 and 2.
struct ShearData {
  std::array<std::complex<double>, 3> x;
  std::array<std::complex<double>, 3> s;

  /// Build from the square roots (x = s^2).
  static ShearData from_roots(const std::array<std::complex<double>, 3>& roots);
  /// ZeroWeight when some x_e is 0; ValidationError when s_e^2 != x_e.
  void validate() const;
};

/// Pleated-surface holonomy of the punctured torus in the artifact's pinned
/// convention: edge matrix Z(s) = [[0,s],[-1/s,0]], turn matrix
/// F = [[1,1],[-1,0]],
///   r(a) = Z(s_1) F^2 Z(s_2) F
///   r(b) = F^{-1} Z(s_2) F^2 Z(s_0) F^2.
/// The convention is validated by puncture_eigenvalue, not assumed.
SL2Rep holonomy(const ShearData& sd);

/// Symbolic generator matrices over the three square-root variables
/// (which = 0 for a, 1 for b).
MMat2 symbolic_generator(int which);

/// Eigenvalue of the puncture holonomy on its invariant line, computed both
/// as a matrix eigenvalue of r([a,b]) and as -(s_0 s_1 s_2)^2; the two must
/// agree to 1e-8 or ConventionMismatch is thrown. Only puncture 0 exists.
std::complex<double> puncture_eigenvalue(const ShearData& sd, int i);

/// Integer-coefficient Laurent polynomial in s_0, s_1, s_2 equal to
/// Tr r(K) for the (p,q) curve (gcd(p,q) = 1).
MLaurent classical_trace_poly(long p, long q);

/// Trace polynomial of the puncture loop:
/// -(s_0 s_1 s_2)^2 - (s_0 s_1 s_2)^{-2}.
MLaurent puncture_trace_poly();

}  // namespace skeinlab
