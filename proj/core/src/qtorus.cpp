#include "skeinlab/qtorus.hpp"

#include <sstream>

namespace skeinlab {

QTorusElement QTorusElement::monomial(WeightVector w, LaurentHalf coeff) {
  QTorusElement e;
  if (!coeff.is_zero()) e.terms_.emplace(std::move(w), std::move(coeff));
  return e;
}

QTorusElement QTorusElement::unit(const TrainTrack& tt) {
  return monomial(WeightVector(static_cast<std::size_t>(tt.branch_count), 0));
}

LaurentHalf QTorusElement::coeff(const WeightVector& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentHalf::zero() : it->second;
}

void QTorusElement::add_term(const WeightVector& w, const LaurentHalf& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QTorusElement& QTorusElement::operator+=(const QTorusElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

QTorusElement& QTorusElement::operator-=(const QTorusElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

QTorusElement QTorusElement::operator+(const QTorusElement& o) const {
  QTorusElement r = *this;
  r += o;
  return r;
}

QTorusElement QTorusElement::operator-(const QTorusElement& o) const {
  QTorusElement r = *this;
  r -= o;
  return r;
}

QTorusElement QTorusElement::operator-() const {
  QTorusElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

QTorusElement QTorusElement::operator*(const LaurentHalf& c) const {
  QTorusElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, q] : terms_) r.terms_.emplace(w, q * c);
  return r;
}

std::string QTorusElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ",";
      os << w[i];
    }
    os << "]";
  }
  return os.str();
}

QTorusElement qt_multiply(const TrainTrack& tt, const QTorusElement& u,
                          const QTorusElement& v) {
  QTorusElement out;
  for (const auto& [wu, cu] : u.terms()) {
    if (!satisfies_switch_conditions(tt, wu))
      throw TrackMismatch("qt_multiply: left factor violates switch conditions");
    for (const auto& [wv, cv] : v.terms()) {
      if (!satisfies_switch_conditions(tt, wv))
        throw TrackMismatch("qt_multiply: right factor violates switch conditions");
      const long long omega = thurston_form(tt, wu, wv);
      WeightVector sum(wu.size());
      for (std::size_t i = 0; i < wu.size(); ++i) sum[i] = wu[i] + wv[i];
      out += QTorusElement::monomial(std::move(sum),
                                     cu * cv * LaurentHalf::monomial_half(omega));
    }
  }
  return out;
}

bool even_parity(const TrainTrack& tt, const WeightVector& w) {
  for (const auto& sw : tt.switches)
    for (const auto& side : sw.sides)
      if (((w[static_cast<std::size_t>(side.left_branch)] -
            w[static_cast<std::size_t>(side.right_branch)]) % 2) != 0)
        return false;
  return true;
}

std::map<WeightVector, std::complex<double>> specialize_a1(const QTorusElement& u) {
  std::map<WeightVector, std::complex<double>> out;
  for (const auto& [w, c] : u.terms()) {
    const std::complex<double> val = c.eval_half({1.0, 0.0});
    if (std::abs(val) > 0.0) out[w] = val;
  }
  return out;
}

}  // namespace skeinlab
