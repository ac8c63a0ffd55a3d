#include "skeinlab/mlaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace skeinlab {

MLaurent MLaurent::constant(int nvars, BigInt c) {
  return monomial(Exps(static_cast<std::size_t>(nvars), 0), std::move(c));
}

MLaurent MLaurent::monomial(Exps e, BigInt c) {
  MLaurent p;
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

MLaurent MLaurent::var(int nvars, int i, int power) {
  Exps e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(i)) = power;
  return monomial(std::move(e));
}

BigInt MLaurent::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MLaurent::add_term(const Exps& e, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MLaurent& MLaurent::operator+=(const MLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MLaurent& MLaurent::operator-=(const MLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MLaurent MLaurent::operator+(const MLaurent& o) const {
  MLaurent r = *this;
  r += o;
  return r;
}

MLaurent MLaurent::operator-(const MLaurent& o) const {
  MLaurent r = *this;
  r -= o;
  return r;
}

MLaurent MLaurent::operator*(const MLaurent& o) const {
  MLaurent r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      if (e1.size() != e2.size())
        throw std::invalid_argument("MLaurent: variable count mismatch");
      Exps e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MLaurent MLaurent::operator-() const {
  MLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

std::complex<double> MLaurent::eval(
    const std::vector<std::complex<double>>& values) const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [e, c] : terms_) {
    if (e.size() != values.size())
      throw std::invalid_argument("MLaurent::eval: variable count mismatch");
    std::complex<double> term{static_cast<double>(c), 0.0};
    for (std::size_t i = 0; i < e.size(); ++i)
      term *= std::pow(values[i], e[i]);
    total += term;
  }
  return total;
}

std::string MLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*s" << i;
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MMat2 MMat2::identity(int nvars) {
  MMat2 m;
  m.a = MLaurent::constant(nvars, 1);
  m.d = MLaurent::constant(nvars, 1);
  return m;
}

MMat2 MMat2::operator*(const MMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d,
          c * o.a + d * o.c, c * o.b + d * o.d};
}

}  // namespace skeinlab
