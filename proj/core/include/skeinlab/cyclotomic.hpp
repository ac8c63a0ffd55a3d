#pragma once

#include <complex>
#include <vector>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Primitive N-th root of unity exp(2*pi*i*k/N) with N odd.
struct RootOfUnity {
  long N = 3;
  long k = 1;

  RootOfUnity(long N_, long k_ = 1);

  /// Numeric value of A.
  std::complex<double> value() const;
  /// Numeric value of the canonical square root A^{1/2} := A^{(N+1)/2}.
  /// This is THE square-root convention for the whole artifact; it makes
  /// evaluation of half-integer exponents a ring homomorphism.
  std::complex<double> half_value() const;
};

/// The N-th cyclotomic polynomial, computed from x^N - 1 by exact division.
IntPoly cyclotomic_polynomial(long N);

/// Element of Z[zeta_N] represented by a residue modulo the N-th cyclotomic
/// polynomial. Exact; used to certify identities at every primitive N-th
/// root at once.
class CyclotomicResidue {
public:
  CyclotomicResidue(long N, std::vector<BigInt> zeta_coeffs);

  /// Substitute A := zeta^k and A^{1/2} := A^{(N+1)/2} into p, reduce mod
  /// the N-th cyclotomic polynomial.
  static CyclotomicResidue from_laurent(const LaurentHalf& p, const RootOfUnity& z);

  bool is_zero() const;
  /// Largest |coefficient| of the reduced residue, as a double.
  double max_abs_coeff() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  long modulus() const { return N_; }

private:
  void reduce();
  long N_;
  std::vector<BigInt> coeffs_;  // degree < phi(N) after reduce()
};

/// Floating-point evaluation of p at A := exp(2*pi*i*k/N) under the
/// canonical half-power convention.
std::complex<double> eval_at_root(const LaurentHalf& p, const RootOfUnity& z);

}  // namespace skeinlab
