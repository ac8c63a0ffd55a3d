#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Exact multivariate Laurent polynomial with integer coefficients, used for
/// trace polynomials in the square-rooted edge weights.
class MLaurent {
public:
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, BigInt>;

  MLaurent() = default;

  static MLaurent zero() { return {}; }
  static MLaurent constant(int nvars, BigInt c);
  static MLaurent monomial(Exps e, BigInt c = 1);
  /// The variable s_i among nvars variables.
  static MLaurent var(int nvars, int i, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  BigInt coeff(const Exps& e) const;

  MLaurent& operator+=(const MLaurent& o);
  MLaurent& operator-=(const MLaurent& o);
  MLaurent operator+(const MLaurent& o) const;
  MLaurent operator-(const MLaurent& o) const;
  MLaurent operator*(const MLaurent& o) const;
  MLaurent operator-() const;
  bool operator==(const MLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const MLaurent& o) const { return !(*this == o); }

  std::complex<double> eval(const std::vector<std::complex<double>>& values) const;

  std::string str() const;

private:
  void add_term(const Exps& e, const BigInt& c);
  Terms terms_;
};

/// 2x2 matrix over MLaurent for symbolic holonomy products.
struct MMat2 {
  MLaurent a, b, c, d;

  static MMat2 identity(int nvars);
  MMat2 operator*(const MMat2& o) const;
  MLaurent trace() const { return a + d; }
  MLaurent det() const { return a * d - b * c; }
  /// Inverse assuming determinant 1.
  MMat2 inverse_sl2() const { return {d, -b, -c, a}; }
};

}  // namespace skeinlab
