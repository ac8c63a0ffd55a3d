#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "skeinlab/qrep.hpp"
#include "skeinlab/qtrace.hpp"

using namespace skeinlab;
using skeinlab::test::data_path;
using skeinlab::test::slurp;

namespace {

const char* kCorpus[] = {
    "punctured_torus.json",
    "three_punctured_sphere.json",
    "four_punctured_sphere.json",
    "two_punctured_torus.json",
};

std::vector<std::complex<double>> random_scalars(Rng& rng, std::size_t n) {
  std::vector<std::complex<double>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.nonzero_complex());
  return out;
}

int rank_mod_n(const OmegaMatrix& omega, long N) {
  // small-matrix Gaussian elimination over Z/N (N odd prime here)
  const std::size_t n = omega.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = ((omega[i][j] % N) + N) % N;
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    long long inv = 1;  // N is tiny, search for the inverse
    for (long long x = 1; x < N; ++x)
      if (m[row][col] * x % N == 1) {
        inv = x;
        break;
      }
    for (std::size_t j = 0; j < n; ++j) m[row][j] = m[row][j] * inv % N;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const long long f = m[i][col];
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = ((m[i][j] - f * m[row][j]) % N + N) % N;
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("qt_multiply twists the group law by A^{omega/2}") {
  const QuantumTrace& qt = quantum_trace_pt();
  const TrainTrack& tt = qt.track;
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> cu, cv;
    for (std::size_t i = 0; i < qt.basis.size(); ++i) {
      cu.push_back(static_cast<long long>(rng.next_below(5)) - 2);
      cv.push_back(static_cast<long long>(rng.next_below(5)) - 2);
    }
    WeightVector u(static_cast<std::size_t>(tt.branch_count), 0);
    WeightVector v = u, sum = u;
    for (std::size_t i = 0; i < qt.basis.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        u[j] += cu[i] * qt.basis[i][j];
        v[j] += cv[i] * qt.basis[i][j];
        sum[j] += (cu[i] + cv[i]) * qt.basis[i][j];
      }
    const long long om = thurston_form(tt, u, v);
    const QTorusElement uv =
        qt_multiply(tt, QTorusElement::monomial(u), QTorusElement::monomial(v));
    CHECK(uv.coeff(sum) == LaurentHalf::monomial_half(om));
    // commutation ratio A^{omega(u,v)}
    const QTorusElement vu =
        qt_multiply(tt, QTorusElement::monomial(v), QTorusElement::monomial(u));
    CHECK(uv.coeff(sum) == LaurentHalf::monomial_half(2 * om) * vu.coeff(sum));
  }
}

TEST_CASE("qt_multiply validates its inputs") {
  const QuantumTrace& qt = quantum_trace_pt();
  WeightVector bad(static_cast<std::size_t>(qt.track.branch_count), 0);
  bad[0] = 1;  // violates the switch conditions
  CHECK_THROWS_AS(qt_multiply(qt.track, QTorusElement::monomial(bad),
                              QTorusElement::unit(qt.track)),
                  TrackMismatch);
}

TEST_CASE("specialization at A = 1 forgets the twist") {
  const QuantumTrace& qt = quantum_trace_pt();
  const auto a1 = specialize_a1(qt_multiply(
      qt.track, QTorusElement::monomial(qt.basis[0]),
      QTorusElement::monomial(qt.basis[1])));
  WeightVector sum = qt.basis[0];
  for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += qt.basis[1][j];
  REQUIRE(a1.size() == 1);
  CHECK(std::abs(a1.at(sum) - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("dimension law d = N^{rank(Omega mod N)/2} across the corpus") {
  Rng rng(42);
  for (const char* file : kCorpus) {
    const Triangulation T = load_triangulation(slurp(data_path(file)));
    const TrainTrack tt = build_train_track(T);
    const auto basis = weight_basis(tt);
    const OmegaMatrix omega = omega_matrix(tt, basis);
    for (long N : {3L, 5L, 7L}) {
      const int r = rank_mod_n(omega, N);
      CHECK(r % 2 == 0);
      long expect = 1;
      for (int i = 0; i < r / 2; ++i) expect *= N;
      const MatrixRep rep =
          build_rep(omega, RootOfUnity(N, 1), random_scalars(rng, basis.size()));
      CHECK(rep.dimension == expect);
      CHECK(verify_rep(rep) < 1e-10);
    }
  }
}

TEST_CASE("punctured-torus representation is irreducible") {
  Rng rng(43);
  const QuantumTrace& qt = quantum_trace_pt();
  const OmegaMatrix omega = omega_matrix(qt.track, qt.basis);
  for (long N : {3L, 5L, 7L}) {
    const MatrixRep rep =
        build_rep(omega, RootOfUnity(N, 1), random_scalars(rng, qt.basis.size()));
    CHECK(rep.dimension == N);
    CHECK(irreducibility_rank(rep) == rep.dimension * rep.dimension);
  }
}

TEST_CASE("rep_of_vector satisfies the Weyl multiplication law") {
  Rng rng(44);
  const QuantumTrace& qt = quantum_trace_pt();
  const OmegaMatrix omega = omega_matrix(qt.track, qt.basis);
  const RootOfUnity z(5, 2);
  const MatrixRep rep = build_rep(omega, z, random_scalars(rng, qt.basis.size()));
  const std::complex<double> A = z.value();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> u, v, sum;
    long long om = 0;
    for (std::size_t i = 0; i < qt.basis.size(); ++i) {
      u.push_back(static_cast<long long>(rng.next_below(7)) - 3);
      v.push_back(static_cast<long long>(rng.next_below(7)) - 3);
      sum.push_back(u.back() + v.back());
    }
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) om += u[i] * omega[i][j] * v[j];
    const Eigen::MatrixXcd lhs = rep_of_vector(rep, u) * rep_of_vector(rep, v);
    const Eigen::MatrixXcd rhs =
        std::pow(A, static_cast<double>(om) / 2.0) * rep_of_vector(rep, sum);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("central character is a group homomorphism at odd N") {
  Rng rng(45);
  const QuantumTrace& qt = quantum_trace_pt();
  const OmegaMatrix omega = omega_matrix(qt.track, qt.basis);
  const RootOfUnity z(5, 1);
  const MatrixRep rep = build_rep(omega, z, random_scalars(rng, qt.basis.size()));
  const CentralCharacter chi = central_character(rep);
  REQUIRE(chi.values.size() == qt.basis.size());

  auto scalar_of = [&](const std::vector<long long>& t) {
    std::vector<long long> nt = t;
    for (auto& x : nt) x *= z.N;
    const Eigen::MatrixXcd M = rep_of_vector(rep, nt);
    return M(0, 0);
  };
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long long> u, v, sum;
    for (std::size_t i = 0; i < qt.basis.size(); ++i) {
      u.push_back(static_cast<long long>(rng.next_below(5)) - 2);
      v.push_back(static_cast<long long>(rng.next_below(5)) - 2);
      sum.push_back(u.back() + v.back());
    }
    CHECK(std::abs(scalar_of(sum) - scalar_of(u) * scalar_of(v)) < 1e-7);
  }
}

TEST_CASE("express_in_basis inverts integer combinations") {
  const QuantumTrace& qt = quantum_trace_pt();
  Rng rng(46);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long long> c;
    WeightVector w(qt.basis[0].size(), 0);
    for (std::size_t i = 0; i < qt.basis.size(); ++i) {
      c.push_back(static_cast<long long>(rng.next_below(9)) - 4);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += c.back() * qt.basis[i][j];
    }
    CHECK(express_in_basis(qt.basis, w) == c);
  }
  WeightVector off(qt.basis[0].size(), 0);
  off[0] = 1;
  CHECK_THROWS_AS(express_in_basis(qt.basis, off), TrackMismatch);
}
