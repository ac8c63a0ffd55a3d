#include "skeinlab/laurent.hpp"

#include <cmath>
#include <sstream>

namespace skeinlab {

LaurentHalf LaurentHalf::monomial_half(std::int64_t doubled_exp, BigInt coeff) {
  LaurentHalf p;
  if (coeff != 0) p.terms_[doubled_exp] = std::move(coeff);
  return p;
}

BigInt LaurentHalf::coeff(std::int64_t doubled_exp) const {
  auto it = terms_.find(doubled_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentHalf::has_integer_exponents() const {
  for (const auto& [d, c] : terms_)
    if (d % 2 != 0) return false;
  return true;
}

void LaurentHalf::add_term(std::int64_t d, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentHalf& LaurentHalf::operator+=(const LaurentHalf& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentHalf& LaurentHalf::operator-=(const LaurentHalf& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentHalf LaurentHalf::operator+(const LaurentHalf& o) const {
  LaurentHalf r = *this;
  r += o;
  return r;
}

LaurentHalf LaurentHalf::operator-(const LaurentHalf& o) const {
  LaurentHalf r = *this;
  r -= o;
  return r;
}

LaurentHalf LaurentHalf::operator*(const LaurentHalf& o) const {
  LaurentHalf r;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
  return r;
}

LaurentHalf LaurentHalf::operator-() const {
  LaurentHalf r;
  for (const auto& [d, c] : terms_) r.terms_[d] = -c;
  return r;
}

std::complex<double> LaurentHalf::eval_half(std::complex<double> w) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [d, c] : terms_) {
    acc += static_cast<double>(c) * std::pow(w, static_cast<double>(d));
  }
  return acc;
}

double LaurentHalf::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [d, c] : terms_) {
    double v = std::abs(static_cast<double>(c));
    if (v > m) m = v;
  }
  return m;
}

std::string LaurentHalf::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [d, c] = *it;
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (d == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "A^";
      if (d % 2 == 0) {
        os << (d / 2);
      } else {
        os << "(" << d << "/2)";
      }
    }
  }
  return os.str();
}

}  // namespace skeinlab
