#include "skeinlab/chebyshev.hpp"

#include <sstream>
#include <stdexcept>

namespace skeinlab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::x() { return IntPoly({0, 1}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> r(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly{};
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(r));
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + static_cast<double>(*it);
  return acc;
}

IntPoly IntPoly::divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("IntPoly: division by zero");
  std::vector<BigInt> rem = num.coeffs_;
  const auto& d = den.coeffs_;
  if (rem.size() < d.size()) {
    if (num.is_zero()) return IntPoly{};
    throw std::invalid_argument("IntPoly: inexact division");
  }
  std::vector<BigInt> quot(rem.size() - d.size() + 1, BigInt(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt lead = rem[i + d.size() - 1];
    if (lead == 0) continue;
    if (lead % d.back() != 0)
      throw std::invalid_argument("IntPoly: inexact division");
    BigInt q = lead / d.back();
    quot[i] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= q * d[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::invalid_argument("IntPoly: nonzero remainder");
  return IntPoly(std::move(quot));
}

std::string IntPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    BigInt c = coeffs_[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (k == 0) {
      os << c.str();
    } else {
      if (c != 1) os << c.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

IntPoly chebyshev(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev: n must be >= 0");
  IntPoly prev = IntPoly::constant(2);  // T_0
  if (n == 0) return prev;
  IntPoly cur = IntPoly::x();  // T_1
  for (int i = 1; i < n; ++i) {
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace skeinlab
