#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/chebyshev.hpp"
#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

/// Element of the once-punctured-torus skein algebra, stored as a linear
/// combination of ordered monomials X1^a X2^b X3^c with exact LaurentHalf
/// coefficients. All stored monomials are in this normal form; no zero
/// coefficients are kept.
class SkeinPTElement {
public:
  using Monomial = std::array<int, 3>;
  using Terms = std::map<Monomial, LaurentHalf>;

  SkeinPTElement() = default;

  static SkeinPTElement zero() { return {}; }
  static SkeinPTElement one() { return monomial({0, 0, 0}); }
  static SkeinPTElement scalar(LaurentHalf c) { return monomial({0, 0, 0}, std::move(c)); }
  /// X_i for i in {1,2,3}.
  static SkeinPTElement generator(int i);
  static SkeinPTElement monomial(Monomial m, LaurentHalf coeff = LaurentHalf::one());

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  LaurentHalf coeff(const Monomial& m) const;

  SkeinPTElement& operator+=(const SkeinPTElement& o);
  SkeinPTElement& operator-=(const SkeinPTElement& o);
  SkeinPTElement operator+(const SkeinPTElement& o) const;
  SkeinPTElement operator-(const SkeinPTElement& o) const;
  SkeinPTElement operator-() const;
  SkeinPTElement operator*(const LaurentHalf& c) const;
  bool operator==(const SkeinPTElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const SkeinPTElement& o) const { return !(*this == o); }

  std::string str() const;

private:
  void add_term(const Monomial& m, const LaurentHalf& c);
  Terms terms_;

  friend SkeinPTElement multiply(const SkeinPTElement&, const SkeinPTElement&);
};

/// Product in the presented algebra: concatenate monomials and rewrite to the
/// ordered normal form with the three swap rules
///   X2 X1 -> A^2 X1 X2 - A(A^2 - A^{-2}) X3
///   X3 X2 -> A^2 X2 X3 - A(A^2 - A^{-2}) X1
///   X3 X1 -> A^{-2} X1 X3 + A^{-1}(A^2 - A^{-2}) X2
/// Exact; terminates because each rewrite lowers (total degree, inversions).
SkeinPTElement multiply(const SkeinPTElement& u, const SkeinPTElement& v);

/// p(e) for a univariate integer polynomial p, by Horner evaluation with the
/// algebra product (used for Chebyshev substitution T_N(X_i)).
SkeinPTElement substitute(const IntPoly& p, const SkeinPTElement& e);

/// Normal form of uv - vu with every coefficient reduced exactly modulo the
/// N-th cyclotomic polynomial; returns the largest residue coefficient
/// magnitude. Zero certifies commutation at every primitive N-th root.
double commutator_at_root(const SkeinPTElement& u, const SkeinPTElement& v,
                          const RootOfUnity& z);

/// Candidate closed-torus central element: quadratic coefficients A^{quad[i]}
/// on X_i^2, cubic coefficient -A^{cubic} on X1X2X3, constant term
/// -2A^2 - 2A^{-2}.
struct CentralCandidate {
  std::array<int, 3> quad{2, -2, 2};
  int cubic = 1;
  bool central = false;

  SkeinPTElement element() const;
  std::string label() const;
};

struct CentralElementReport {
  CentralCandidate verbatim;       // the displayed coefficient pattern
  CentralCandidate symmetric;      // all quadratic coefficients A^2, cubic -A
  std::vector<CentralCandidate> survey;  // the full coefficient-pattern scan
  std::vector<std::string> notes;

  std::string text() const;
};

/// Forms the displayed element, tests its commutators with X1, X2, X3
/// symbolically, and scans the quadratic/cubic coefficient patterns
/// {A^2, A^{-2}}^3 x {-A, -A^{-1}} for the ones that are actually central.
CentralElementReport closed_torus_central_check();

/// Commutative skein algebras of the small surfaces.
struct SmallSurfaceAlgebra {
  enum class Kind { sphere, disk, annulus, three_punctured_sphere };
  Kind kind = Kind::sphere;

  int generator_count() const;
  static SmallSurfaceAlgebra from_name(const std::string& name);
  std::string name() const;
};

/// The one-dimensional representation sending generator i to values[i];
/// isomorphism class is exactly the value tuple.
std::vector<std::complex<double>> small_irrep(
    const SmallSurfaceAlgebra& alg, const std::vector<std::complex<double>>& values);

}  // namespace skeinlab
