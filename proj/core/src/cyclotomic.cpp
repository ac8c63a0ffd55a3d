#include "skeinlab/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "skeinlab/errors.hpp"

namespace skeinlab {

RootOfUnity::RootOfUnity(long N_, long k_) : N(N_), k(k_) {
  if (N < 3 || N % 2 == 0)
    throw EvenN("RootOfUnity: N must be odd and >= 3");
  if (std::gcd(k % N + N, N) != 1)
    throw ValidationError("RootOfUnity: gcd(k, N) must be 1");
}

std::complex<double> RootOfUnity::value() const {
  const double t = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(N);
  return {std::cos(t), std::sin(t)};
}

std::complex<double> RootOfUnity::half_value() const {
  const double t = 2.0 * M_PI * static_cast<double>(k) *
                   static_cast<double>((N + 1) / 2) / static_cast<double>(N);
  return {std::cos(t), std::sin(t)};
}

IntPoly cyclotomic_polynomial(long N) {
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N >= 1");
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<BigInt> xn(N + 1, BigInt(0));
  xn[0] = -1;
  xn[N] = 1;
  IntPoly num{std::move(xn)};
  IntPoly den = IntPoly::constant(1);
  for (long d = 1; d < N; ++d)
    if (N % d == 0) den = den * cyclotomic_polynomial(d);
  return IntPoly::divide_exact(num, den);
}

CyclotomicResidue::CyclotomicResidue(long N, std::vector<BigInt> zeta_coeffs)
    : N_(N), coeffs_(std::move(zeta_coeffs)) {
  reduce();
}

void CyclotomicResidue::reduce() {
  static std::map<long, IntPoly> cache;
  auto it = cache.find(N_);
  if (it == cache.end()) it = cache.emplace(N_, cyclotomic_polynomial(N_)).first;
  const IntPoly& phi = it->second;
  const std::size_t deg = static_cast<std::size_t>(phi.degree());
  while (coeffs_.size() > deg) {
    BigInt lead = coeffs_.back();
    std::size_t top = coeffs_.size() - 1;
    coeffs_.pop_back();
    if (lead == 0) continue;
    // subtract lead * x^{top-deg} * phi (monic)
    for (std::size_t j = 0; j < deg; ++j)
      coeffs_[top - deg + j] -= lead * phi.coeff(j);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CyclotomicResidue CyclotomicResidue::from_laurent(const LaurentHalf& p,
                                                  const RootOfUnity& z) {
  const long N = z.N;
  std::vector<BigInt> acc(static_cast<std::size_t>(N), BigInt(0));
  // A^{d/2} = zeta^{k * d * (N+1)/2 mod N}
  const long half = (N + 1) / 2;
  for (const auto& [d, c] : p.terms()) {
    long e = static_cast<long>(((z.k % N) * (d % N) % N) * (half % N) % N);
    e = ((e % N) + N) % N;
    acc[static_cast<std::size_t>(e)] += c;
  }
  return CyclotomicResidue(N, std::move(acc));
}

bool CyclotomicResidue::is_zero() const { return coeffs_.empty(); }

double CyclotomicResidue::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) {
    double v = std::abs(static_cast<double>(c));
    if (v > m) m = v;
  }
  return m;
}

std::complex<double> eval_at_root(const LaurentHalf& p, const RootOfUnity& z) {
  return p.eval_half(z.half_value());
}

}  // namespace skeinlab
