#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "skeinlab/holonomy.hpp"
#include "skeinlab/qrep.hpp"
#include "skeinlab/qtrace.hpp"

namespace skeinlab {

/// Options of the desk-scale pipeline. h_apow is the integer A-exponent of
/// the puncture weight h; the pinned calibration corresponds to h = A^{-1},
/// and any other choice multiplies the puncture scalar p by a root of unity
/// while leaving T_N(p) unchanged (a tested invariant, not an assumption).
struct ShadowOptions {
  long h_apow = -1;
};

struct ShadowCurveRecord {
  int index = 0;                     // generator index 1..3
  long p = 0, q = 0;                 // curve slope
  std::complex<double> lambda;       // Schur scalar of rho(T_N(Y_i))
  std::complex<double> target;       // -Tr r(K_i), spinned sign convention
  double schur_residual = 0.0;
  double error = 0.0;
};

struct ShadowPunctureRecord {
  std::complex<double> p_scalar;     // scalar of the image of the boundary skein
  std::complex<double> tn_p;         // T_N(p)
  std::complex<double> target;       // -Tr r(P), spinned sign convention
  double schur_residual = 0.0;
  double error = 0.0;
  double power_consistency = 0.0;    // |T_N(p) - (mu^N + mu^-N)| via the
                                     // central character, the bookkeeping check
};

struct ShadowReport {
  long N = 0;
  long k = 0;
  int dimension = 0;
  int irrep_rank = 0;
  std::vector<ShadowCurveRecord> curves;
  ShadowPunctureRecord puncture;
  std::vector<std::string> notes;

  double max_error() const;
};

/// Spin monodromy of the (p,q) simple closed curve with vertical framing in
/// the pinned spin structure: sigma = p*q mod 2. The trace of the spinned
/// homomorphism is Tr r(K) = (-1)^sigma Tr rhat(K) with rhat = holonomy(sd);
/// this quadratic refinement is exactly what makes the per-curve signs of
/// the shadow consistent (a uniform sign provably cannot be).
int spin_monodromy(long p, long q);

/// The desk-scale pipeline on the punctured torus: builds the quantum-torus
/// representation whose central character is the multiplicative extension of
///   chi(w_a) = -s^(0,1,1),  chi(w_b) = -s^(1,0,1),  chi(w_ab) = +s^(1,1,0)
/// on the curve basis (exponents are edge coordinates), composes with the
/// quantum trace, certifies rho(T_N(Y_i)) scalar, and compares against the
/// spinned holonomy traces and the puncture invariant.
/// Rejects non-generic inputs (puncture trace within 1e-6 of +-2).
ShadowReport shadow_pipeline(const ShearData& sd, const RootOfUnity& root,
                             const ShadowOptions& opt = {});

}  // namespace skeinlab
