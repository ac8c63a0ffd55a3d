#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace skeinlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in a formal half-power of the quantum parameter A.
/// Exponents are stored doubled, so the key d represents the monomial A^{d/2}.
/// Coefficients are arbitrary-precision integers; zero coefficients are never
/// stored.
class LaurentHalf {
public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentHalf() = default;

  static LaurentHalf zero() { return LaurentHalf{}; }
  static LaurentHalf one() { return monomial_half(0); }
  /// A^{doubled_exp/2} times coeff.
  static LaurentHalf monomial_half(std::int64_t doubled_exp, BigInt coeff = 1);
  /// A^{power} (integer power).
  static LaurentHalf A(std::int64_t power, BigInt coeff = 1) {
    return monomial_half(2 * power, std::move(coeff));
  }
  static LaurentHalf constant(BigInt c) { return monomial_half(0, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Coefficient of A^{doubled_exp/2} (zero if absent).
  BigInt coeff(std::int64_t doubled_exp) const;

  /// True if every exponent is an integer power of A.
  bool has_integer_exponents() const;

  LaurentHalf& operator+=(const LaurentHalf& o);
  LaurentHalf& operator-=(const LaurentHalf& o);
  LaurentHalf operator+(const LaurentHalf& o) const;
  LaurentHalf operator-(const LaurentHalf& o) const;
  LaurentHalf operator*(const LaurentHalf& o) const;
  LaurentHalf operator-() const;
  bool operator==(const LaurentHalf& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentHalf& o) const { return !(*this == o); }

  /// Substitute a numeric value for A^{1/2}.
  std::complex<double> eval_half(std::complex<double> half_value) const;

  /// Largest |coefficient| as a double (0 for the zero polynomial).
  double max_abs_coeff() const;

  std::string str() const;

private:
  void add_term(std::int64_t doubled_exp, const BigInt& c);
  Terms terms_;
};

}  // namespace skeinlab
