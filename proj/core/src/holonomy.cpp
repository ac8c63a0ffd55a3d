#include "skeinlab/holonomy.hpp"

#include <cmath>
#include <stdexcept>

namespace skeinlab {

namespace {

constexpr int kVars = 3;

MMat2 sym_Z(int e) {
  MMat2 m;
  m.b = MLaurent::var(kVars, e, 1);
  m.c = -MLaurent::var(kVars, e, -1);
  return m;
}

MMat2 sym_F() {
  MMat2 m;
  m.a = MLaurent::constant(kVars, 1);
  m.b = MLaurent::constant(kVars, 1);
  m.c = MLaurent::constant(kVars, -1);
  return m;
}

Mat2 num_Z(std::complex<double> s) {
  return {{0.0, 0.0}, s, -1.0 / s, {0.0, 0.0}};
}

const Mat2 kF{{1.0, 0.0}, {1.0, 0.0}, {-1.0, 0.0}, {0.0, 0.0}};

Mat2 num_generator(int which, const ShearData& sd) {
  const Mat2 F = kF;
  const Mat2 F2 = F * F;
  const Mat2 Finv = F.inverse_sl2();
  if (which == 0) return num_Z(sd.s[1]) * F2 * num_Z(sd.s[2]) * F;
  return Finv * num_Z(sd.s[2]) * F2 * num_Z(sd.s[0]) * F2;
}

}  // namespace

ShearData ShearData::from_roots(const std::array<std::complex<double>, 3>& roots) {
  ShearData sd;
  sd.s = roots;
  for (int e = 0; e < 3; ++e)
    sd.x[static_cast<std::size_t>(e)] =
        roots[static_cast<std::size_t>(e)] * roots[static_cast<std::size_t>(e)];
  sd.validate();
  return sd;
}

void ShearData::validate() const {
  for (int e = 0; e < 3; ++e) {
    const auto& xe = x[static_cast<std::size_t>(e)];
    const auto& se = s[static_cast<std::size_t>(e)];
    if (std::abs(xe) == 0.0)
      throw ZeroWeight("shear data: edge weight " + std::to_string(e) + " is zero");
    if (std::abs(se * se - xe) > 1e-12 * std::max(1.0, std::abs(xe)))
      throw ValidationError("shear data: square root mismatch on edge " +
                            std::to_string(e));
  }
}

SL2Rep holonomy(const ShearData& sd) {
  sd.validate();
  SL2Rep r;
  r.matrices.push_back(num_generator(0, sd));
  r.matrices.push_back(num_generator(1, sd));
  return r;
}

MMat2 symbolic_generator(int which) {
  const MMat2 F = sym_F();
  const MMat2 F2 = F * F;
  const MMat2 Finv = F.inverse_sl2();
  if (which == 0) return sym_Z(1) * F2 * sym_Z(2) * F;
  if (which == 1) return Finv * sym_Z(2) * F2 * sym_Z(0) * F2;
  throw std::out_of_range("symbolic_generator: expected 0 or 1");
}

std::complex<double> puncture_eigenvalue(const ShearData& sd, int i) {
  if (i != 0) throw std::out_of_range("puncture_eigenvalue: only puncture 0 exists");
  sd.validate();
  const SL2Rep r = holonomy(sd);
  const Mat2& a = r.matrices[0];
  const Mat2& b = r.matrices[1];
  const Mat2 K = a * b * a.inverse_sl2() * b.inverse_sl2();
  const std::complex<double> tr = K.trace();
  const std::complex<double> disc = std::sqrt(tr * tr - 4.0);
  const std::complex<double> lam1 = (tr + disc) / 2.0;
  const std::complex<double> lam2 = (tr - disc) / 2.0;

  const std::complex<double> prod = sd.s[0] * sd.s[1] * sd.s[2];
  const std::complex<double> target = -prod * prod;
  const std::complex<double> lam =
      std::abs(lam1 - target) <= std::abs(lam2 - target) ? lam1 : lam2;
  const double scale = std::max(1.0, std::abs(target));
  if (std::abs(lam - target) > 1e-8 * scale)
    throw ConventionMismatch(
        "puncture_eigenvalue: matrix eigenvalue and signed weight product "
        "disagree");
  return lam;
}

MLaurent classical_trace_poly(long p, long q) {
  const GroupWord w = pq_word(p, q);
  const MMat2 A = symbolic_generator(0);
  const MMat2 B = symbolic_generator(1);
  const MMat2 Ainv = A.inverse_sl2();
  const MMat2 Binv = B.inverse_sl2();
  MMat2 M = MMat2::identity(kVars);
  for (const auto& [gen, exp] : w.letters) {
    if (gen == 0)
      M = M * (exp >= 0 ? A : Ainv);
    else if (gen == 1)
      M = M * (exp >= 0 ? B : Binv);
    else
      throw UnsupportedCurve("classical_trace_poly: word uses unknown generator");
  }
  return M.trace();
}

MLaurent puncture_trace_poly() {
  MLaurent::Exps up{2, 2, 2}, down{-2, -2, -2};
  return MLaurent::monomial(up, -1) + MLaurent::monomial(down, -1);
}

}  // namespace skeinlab
