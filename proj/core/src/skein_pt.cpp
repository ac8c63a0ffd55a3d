#include "skeinlab/skein_pt.hpp"

#include <sstream>

namespace skeinlab {

namespace {

// coefficients of the three swap rules
const LaurentHalf& coeff_A2() {
  static const LaurentHalf c = LaurentHalf::A(2);
  return c;
}
const LaurentHalf& coeff_Am2() {
  static const LaurentHalf c = LaurentHalf::A(-2);
  return c;
}
// -A(A^2 - A^{-2}) = A^{-1} - A^3
const LaurentHalf& coeff_swap() {
  static const LaurentHalf c = LaurentHalf::A(-1) - LaurentHalf::A(3);
  return c;
}
// A^{-1}(A^2 - A^{-2}) = A - A^{-3}
const LaurentHalf& coeff_swap31() {
  static const LaurentHalf c = LaurentHalf::A(1) - LaurentHalf::A(-3);
  return c;
}

SkeinPTElement mul_mono_gen(SkeinPTElement::Monomial m, int g);

// right-multiply a normal-form element by a single generator
SkeinPTElement mul_elem_gen(const SkeinPTElement& e, int g) {
  SkeinPTElement out;
  for (const auto& [m, q] : e.terms()) out += mul_mono_gen(m, g) * q;
  return out;
}

// append X3: stays normal
SkeinPTElement append_x3(const SkeinPTElement& e) {
  SkeinPTElement out;
  for (const auto& [m, q] : e.terms())
    out += SkeinPTElement::monomial({m[0], m[1], m[2] + 1}, q);
  return out;
}

// X1^a X2^b X3^c times X_g, rewritten to normal form
SkeinPTElement mul_mono_gen(SkeinPTElement::Monomial m, int g) {
  const int a = m[0], b = m[1], c = m[2];
  switch (g) {
    case 3:
      return SkeinPTElement::monomial({a, b, c + 1});
    case 2:
      if (c == 0) return SkeinPTElement::monomial({a, b + 1, 0});
      // X3 X2 -> A^2 X2 X3 - A(A^2 - A^{-2}) X1
      return append_x3(mul_mono_gen({a, b, c - 1}, 2)) * coeff_A2() +
             mul_mono_gen({a, b, c - 1}, 1) * coeff_swap();
    case 1:
      if (b == 0 && c == 0) return SkeinPTElement::monomial({a + 1, 0, 0});
      if (c > 0) {
        // X3 X1 -> A^{-2} X1 X3 + A^{-1}(A^2 - A^{-2}) X2
        return append_x3(mul_mono_gen({a, b, c - 1}, 1)) * coeff_Am2() +
               mul_mono_gen({a, b, c - 1}, 2) * coeff_swap31();
      }
      // X2 X1 -> A^2 X1 X2 - A(A^2 - A^{-2}) X3
      return mul_elem_gen(mul_mono_gen({a, b - 1, 0}, 1), 2) * coeff_A2() +
             SkeinPTElement::monomial({a, b - 1, 1}, coeff_swap());
    default:
      throw ValidationError("generator index must be 1, 2 or 3");
  }
}

}  // namespace

SkeinPTElement SkeinPTElement::generator(int i) {
  if (i < 1 || i > 3) throw ValidationError("generator index must be 1, 2 or 3");
  Monomial m{0, 0, 0};
  m[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(m);
}

SkeinPTElement SkeinPTElement::monomial(Monomial m, LaurentHalf coeff) {
  SkeinPTElement e;
  if (!coeff.is_zero()) e.terms_.emplace(m, std::move(coeff));
  return e;
}

LaurentHalf SkeinPTElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentHalf::zero() : it->second;
}

void SkeinPTElement::add_term(const Monomial& m, const LaurentHalf& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SkeinPTElement& SkeinPTElement::operator+=(const SkeinPTElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SkeinPTElement& SkeinPTElement::operator-=(const SkeinPTElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SkeinPTElement SkeinPTElement::operator+(const SkeinPTElement& o) const {
  SkeinPTElement r = *this;
  r += o;
  return r;
}

SkeinPTElement SkeinPTElement::operator-(const SkeinPTElement& o) const {
  SkeinPTElement r = *this;
  r -= o;
  return r;
}

SkeinPTElement SkeinPTElement::operator-() const {
  SkeinPTElement r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SkeinPTElement SkeinPTElement::operator*(const LaurentHalf& c) const {
  SkeinPTElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
  return r;
}

std::string SkeinPTElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < 3; ++i) {
      if (m[static_cast<std::size_t>(i)] == 0) continue;
      os << "*X" << (i + 1);
      if (m[static_cast<std::size_t>(i)] > 1)
        os << "^" << m[static_cast<std::size_t>(i)];
    }
  }
  return os.str();
}

SkeinPTElement multiply(const SkeinPTElement& u, const SkeinPTElement& v) {
  SkeinPTElement out;
  for (const auto& [m, q] : v.terms()) {
    SkeinPTElement cur = u;
    for (int g = 1; g <= 3; ++g)
      for (int rep = 0; rep < m[static_cast<std::size_t>(g - 1)]; ++rep)
        cur = mul_elem_gen(cur, g);
    out += cur * q;
  }
  return out;
}

SkeinPTElement substitute(const IntPoly& p, const SkeinPTElement& e) {
  if (p.is_zero()) return SkeinPTElement::zero();
  const int deg = p.degree();
  SkeinPTElement acc =
      SkeinPTElement::scalar(LaurentHalf::constant(p.coeff(static_cast<std::size_t>(deg))));
  for (int k = deg - 1; k >= 0; --k) {
    acc = multiply(acc, e);
    acc += SkeinPTElement::scalar(LaurentHalf::constant(p.coeff(static_cast<std::size_t>(k))));
  }
  return acc;
}

double commutator_at_root(const SkeinPTElement& u, const SkeinPTElement& v,
                          const RootOfUnity& z) {
  const SkeinPTElement w = multiply(u, v) - multiply(v, u);
  double worst = 0.0;
  for (const auto& [m, c] : w.terms()) {
    const double r = CyclotomicResidue::from_laurent(c, z).max_abs_coeff();
    worst = std::max(worst, r);
  }
  return worst;
}

SkeinPTElement CentralCandidate::element() const {
  SkeinPTElement e;
  e += SkeinPTElement::monomial({2, 0, 0}, LaurentHalf::A(quad[0]));
  e += SkeinPTElement::monomial({0, 2, 0}, LaurentHalf::A(quad[1]));
  e += SkeinPTElement::monomial({0, 0, 2}, LaurentHalf::A(quad[2]));
  e += SkeinPTElement::monomial({1, 1, 1}, LaurentHalf::A(cubic, -1));
  e += SkeinPTElement::scalar(LaurentHalf::A(2, -2) + LaurentHalf::A(-2, -2));
  return e;
}

std::string CentralCandidate::label() const {
  std::ostringstream os;
  os << "A^" << quad[0] << "*X1^2 + A^" << quad[1] << "*X2^2 + A^" << quad[2]
     << "*X3^2 - A^" << cubic << "*X1*X2*X3 - 2A^2 - 2A^-2";
  return os.str();
}

namespace {

bool is_central(const SkeinPTElement& e) {
  for (int i = 1; i <= 3; ++i) {
    const SkeinPTElement x = SkeinPTElement::generator(i);
    if (!(multiply(e, x) - multiply(x, e)).is_zero()) return false;
  }
  return true;
}

}  // namespace

CentralElementReport closed_torus_central_check() {
  CentralElementReport rep;
  rep.verbatim = CentralCandidate{{2, -2, 2}, 1, false};
  rep.verbatim.central = is_central(rep.verbatim.element());
  rep.symmetric = CentralCandidate{{2, 2, 2}, 1, false};
  rep.symmetric.central = is_central(rep.symmetric.element());
  for (int mask = 0; mask < 8; ++mask) {
    for (int cub : {1, -1}) {
      CentralCandidate cand;
      for (int i = 0; i < 3; ++i)
        cand.quad[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -2 : 2;
      cand.cubic = cub;
      cand.central = is_central(cand.element());
      rep.survey.push_back(cand);
    }
  }
  rep.notes.push_back(std::string("displayed pattern is ") +
                      (rep.verbatim.central ? "central" : "NOT central"));
  rep.notes.push_back(std::string("symmetric pattern is ") +
                      (rep.symmetric.central ? "central" : "NOT central"));
  int count = 0;
  for (const auto& c : rep.survey)
    if (c.central) ++count;
  rep.notes.push_back("central patterns found in the survey: " + std::to_string(count));
  return rep;
}

std::string CentralElementReport::text() const {
  std::ostringstream os;
  os << "closed-torus central element check\n";
  os << "==================================\n\n";
  os << "displayed element:  " << verbatim.label() << "\n";
  os << "  verdict: " << (verbatim.central ? "CENTRAL" : "NOT CENTRAL") << "\n\n";
  os << "symmetric variant:  " << symmetric.label() << "\n";
  os << "  verdict: " << (symmetric.central ? "CENTRAL" : "NOT CENTRAL") << "\n\n";
  os << "coefficient-pattern survey (quadratic exponents in {2,-2}, cubic in {1,-1}):\n";
  for (const auto& c : survey)
    os << "  " << (c.central ? "[central]     " : "[not central] ") << c.label()
       << "\n";
  os << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  return os.str();
}

int SmallSurfaceAlgebra::generator_count() const {
  switch (kind) {
    case Kind::sphere:
    case Kind::disk:
      return 0;
    case Kind::annulus:
      return 1;
    case Kind::three_punctured_sphere:
      return 3;
  }
  return 0;
}

SmallSurfaceAlgebra SmallSurfaceAlgebra::from_name(const std::string& name) {
  if (name == "sphere") return {Kind::sphere};
  if (name == "disk") return {Kind::disk};
  if (name == "annulus") return {Kind::annulus};
  if (name == "three_punctured_sphere") return {Kind::three_punctured_sphere};
  throw ValidationError("unknown small surface: " + name);
}

std::string SmallSurfaceAlgebra::name() const {
  switch (kind) {
    case Kind::sphere: return "sphere";
    case Kind::disk: return "disk";
    case Kind::annulus: return "annulus";
    case Kind::three_punctured_sphere: return "three_punctured_sphere";
  }
  return "?";
}

std::vector<std::complex<double>> small_irrep(
    const SmallSurfaceAlgebra& alg, const std::vector<std::complex<double>>& values) {
  if (static_cast<int>(values.size()) != alg.generator_count())
    throw ArityMismatch("small_irrep: expected " +
                        std::to_string(alg.generator_count()) + " values, got " +
                        std::to_string(values.size()));
  return values;
}

}  // namespace skeinlab
