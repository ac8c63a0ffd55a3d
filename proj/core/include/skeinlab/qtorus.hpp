#pragma once

#include <map>
#include <string>

#include "skeinlab/laurent.hpp"
#include "skeinlab/traintrack.hpp"

namespace skeinlab {

/// Element of the Chekhov-Fock quantum torus of a train track: a finite
/// linear combination of switch-condition weight vectors with LaurentHalf
/// coefficients. Monomials multiply by the twisted group law
///   alpha . beta = A^{omega(alpha,beta)/2} (alpha + beta).
class QTorusElement {
public:
  using Terms = std::map<WeightVector, LaurentHalf>;

  QTorusElement() = default;

  static QTorusElement zero() { return {}; }
  static QTorusElement monomial(WeightVector w, LaurentHalf coeff = LaurentHalf::one());
  static QTorusElement unit(const TrainTrack& tt);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  LaurentHalf coeff(const WeightVector& w) const;

  QTorusElement& operator+=(const QTorusElement& o);
  QTorusElement& operator-=(const QTorusElement& o);
  QTorusElement operator+(const QTorusElement& o) const;
  QTorusElement operator-(const QTorusElement& o) const;
  QTorusElement operator-() const;
  QTorusElement operator*(const LaurentHalf& c) const;
  bool operator==(const QTorusElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const QTorusElement& o) const { return !(*this == o); }

  std::string str() const;

private:
  void add_term(const WeightVector& w, const LaurentHalf& c);
  Terms terms_;
};

/// Bilinear extension of the twisted monomial product. Every key must
/// satisfy the switch conditions of tt and have the right length.
QTorusElement qt_multiply(const TrainTrack& tt, const QTorusElement& u,
                          const QTorusElement& v);

/// Whether every switch side of tt sees weights of equal parity in w (the
/// parity subalgebra condition).
bool even_parity(const TrainTrack& tt, const WeightVector& w);

/// Specialize every coefficient at A := 1 (A^{1/2} := 1) and return the
/// resulting numeric combination of lattice monomials.
std::map<WeightVector, std::complex<double>> specialize_a1(const QTorusElement& u);

}  // namespace skeinlab
