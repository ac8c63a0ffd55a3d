#pragma once

#include <complex>
#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Univariate polynomial in an abstract variable x with integer coefficients.
/// coeffs[k] is the coefficient of x^k; the leading coefficient is nonzero
/// unless the polynomial is zero.
class IntPoly {
public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly zero() { return IntPoly{}; }
  static IntPoly constant(BigInt c);
  static IntPoly x();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
  }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  std::complex<double> eval(std::complex<double> x) const;

  /// Exact division; requires the remainder to vanish (used for cyclotomic
  /// polynomial construction).
  static IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Normalized first-kind Chebyshev polynomial T_n: T_0 = 2, T_1 = x,
/// T_{n+1} = x*T_n - T_{n-1}.
IntPoly chebyshev(int n);

}  // namespace skeinlab
