#include "skeinlab/qrep.hpp"

#include <numeric>
#include <stdexcept>

namespace skeinlab {

namespace {

long long mod_pos(long long x, long long N) {
  const long long r = x % N;
  return r < 0 ? r + N : r;
}

long long mod_inverse(long long a, long long N) {
  long long t = 0, new_t = 1, r = N, new_r = mod_pos(a, N);
  while (new_r != 0) {
    const long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1)
    throw NormalFormFailure("mod_inverse: " + std::to_string(a) +
                            " is not a unit mod " + std::to_string(N));
  return mod_pos(t, N);
}

using ModMat = std::vector<std::vector<long long>>;

ModMat mod_matrix_inverse(const ModMat& M, long long N) {
  const std::size_t n = M.size();
  ModMat A = M;
  ModMat inv(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && std::gcd(mod_pos(A[p][c], N), N) != 1) ++p;
    if (p == n)
      throw NormalFormFailure("mod_matrix_inverse: no unit pivot in column " +
                              std::to_string(c));
    std::swap(A[p], A[c]);
    std::swap(inv[p], inv[c]);
    const long long u = mod_inverse(A[c][c], N);
    for (std::size_t j = 0; j < n; ++j) {
      A[c][j] = mod_pos(A[c][j] * u, N);
      inv[c][j] = mod_pos(inv[c][j] * u, N);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const long long f = A[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        A[r][j] = mod_pos(A[r][j] - f * A[c][j], N);
        inv[r][j] = mod_pos(inv[r][j] - f * inv[c][j], N);
      }
    }
  }
  return inv;
}

double max_abs_entry(const Eigen::MatrixXcd& M) {
  return M.cwiseAbs().maxCoeff();
}

}  // namespace

OmegaMatrix omega_matrix(const TrainTrack& tt, const std::vector<WeightVector>& basis) {
  const std::size_t r = basis.size();
  OmegaMatrix omega(r, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const long long w = thurston_form(tt, basis[i], basis[j]);
      omega[i][j] = w;
      omega[j][i] = -w;
    }
  return omega;
}

MatrixRep build_rep(const OmegaMatrix& omega, const RootOfUnity& root,
                    const std::vector<std::complex<double>>& scalars) {
  const std::size_t r = omega.size();
  const long long N = root.N;
  if (scalars.size() != r)
    throw ArityMismatch("build_rep: need one scalar per basis vector");
  for (const auto& s : scalars)
    if (std::abs(s) == 0.0) throw ZeroScalar("build_rep: zero scalar parameter");

  // reduce Omega mod N to symplectic pairs + kernel by a congruence
  // transform; U rows express the new basis f in the old basis
  ModMat U(r, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) U[i][i] = 1;

  // W = U Omega U^T mod N, recomputed from U after every change so the
  // pairings always describe the current basis
  ModMat W;
  auto refresh_w = [&]() {
    W.assign(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        long long acc = 0;
        for (std::size_t a = 0; a < r; ++a)
          for (std::size_t b = 0; b < r; ++b)
            acc += mod_pos(U[i][a] * omega[a][b] % N * U[j][b], N);
        W[i][j] = mod_pos(acc, N);
      }
  };
  refresh_w();

  std::vector<bool> active(r, true);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (;;) {
    std::size_t pi = r, pj = r;
    for (std::size_t i = 0; i < r && pi == r; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (!active[j] || j == i) continue;
        if (std::gcd(W[i][j], N) == 1) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == r) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (active[i] && active[j] && W[i][j] != 0)
            throw NormalFormFailure(
                "build_rep: no unit pivot though the reduced form is nonzero "
                "(composite N outside the supported corpus)");
      break;
    }
    // scale f_pj so the pairing becomes 1
    const long long u = mod_inverse(W[pi][pj], N);
    for (std::size_t a = 0; a < r; ++a) U[pj][a] = mod_pos(U[pj][a] * u, N);
    refresh_w();
    // decouple every other vector from the pair; refresh between steps so
    // each correction uses the pairings of the current basis
    for (std::size_t k = 0; k < r; ++k) {
      if (k == pi || k == pj) continue;
      const long long c1 = W[k][pj], c2 = W[k][pi];
      if (c1 == 0 && c2 == 0) continue;
      for (std::size_t a = 0; a < r; ++a)
        U[k][a] = mod_pos(U[k][a] - c1 * U[pi][a] + c2 * U[pj][a], N);
      refresh_w();
    }
    pairs.emplace_back(pi, pj);
    active[pi] = active[pj] = false;
  }

  const std::size_t g = pairs.size();
  long long d = 1;
  for (std::size_t t = 0; t < g; ++t) d *= N;
  const std::complex<double> A = root.value();
  const std::complex<double> Ahalf = root.half_value();

  // clock/shift generators on the g mixed-radix digits; the f-basis vector
  // of pair t maps to (clock_t, shift_t), kernel vectors to the identity
  auto digit = [&](long long idx, std::size_t t) {
    for (std::size_t s = 0; s < t; ++s) idx /= N;
    return idx % N;
  };
  std::vector<Eigen::MatrixXcd> f_images(
      r, Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d),
                                    static_cast<Eigen::Index>(d)));
  for (std::size_t t = 0; t < g; ++t) {
    Eigen::MatrixXcd clock = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                    static_cast<Eigen::Index>(d));
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                    static_cast<Eigen::Index>(d));
    long long stride = 1;
    for (std::size_t s = 0; s < t; ++s) stride *= N;
    for (long long idx = 0; idx < d; ++idx) {
      const long long dt = digit(idx, t);
      clock(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) =
          std::polar(1.0, std::arg(A) * static_cast<double>(dt));
      const long long dest = idx + ((dt + 1) % N - dt) * stride;
      shift(static_cast<Eigen::Index>(dest), static_cast<Eigen::Index>(idx)) = 1.0;
    }
    f_images[pairs[t].first] = clock;
    f_images[pairs[t].second] = shift;
  }

  // express the original basis in f-coordinates and Weyl-order the products
  const ModMat V = mod_matrix_inverse(U, N);
  MatrixRep rep{root, static_cast<int>(d), {}, scalars, omega};
  for (std::size_t i = 0; i < r; ++i) {
    long long half_exp = 0;  // -(1/2) sum_{a<b} t_a t_b W'[a][b], doubled sign folded below
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(d),
                                                    static_cast<Eigen::Index>(d));
    for (std::size_t a = 0; a < r; ++a) {
      const long long ta = V[i][a];
      for (std::size_t b = a + 1; b < r; ++b) half_exp -= ta * V[i][b] * W[a][b];
      for (long long rep_count = 0; rep_count < ta; ++rep_count) M = M * f_images[a];
    }
    const std::complex<double> phase =
        std::polar(1.0, std::arg(Ahalf) * static_cast<double>(half_exp));
    rep.images.push_back(scalars[i] * phase * M);
  }
  return rep;
}

double verify_rep(const MatrixRep& rep) {
  const std::complex<double> A = rep.root.value();
  double worst = 0.0;
  for (std::size_t i = 0; i < rep.rank(); ++i)
    for (std::size_t j = i + 1; j < rep.rank(); ++j) {
      const std::complex<double> tw =
          std::polar(1.0, std::arg(A) * static_cast<double>(rep.omega[i][j]));
      const Eigen::MatrixXcd res =
          rep.images[i] * rep.images[j] - tw * rep.images[j] * rep.images[i];
      worst = std::max(worst, max_abs_entry(res));
    }
  return worst;
}

int irreducibility_rank(const MatrixRep& rep) {
  const Eigen::Index d = rep.images.empty()
                             ? static_cast<Eigen::Index>(rep.dimension)
                             : rep.images[0].rows();
  const Eigen::Index dim2 = d * d;
  std::vector<Eigen::VectorXcd> ortho;
  std::vector<Eigen::MatrixXcd> queue;
  auto try_add = [&](const Eigen::MatrixXcd& M) {
    Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(M.data(), dim2);
    for (const auto& b : ortho) v -= b.dot(v) * b;
    if (v.norm() > 1e-8) {
      ortho.push_back(v.normalized());
      queue.push_back(M);
    }
  };
  try_add(Eigen::MatrixXcd::Identity(d, d));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (static_cast<Eigen::Index>(ortho.size()) == dim2) break;
    const Eigen::MatrixXcd cur = queue[head];
    for (const auto& img : rep.images) try_add(cur * img);
  }
  return static_cast<int>(ortho.size());
}

Eigen::MatrixXcd rep_of_vector(const MatrixRep& rep, const std::vector<long long>& t) {
  if (t.size() != rep.rank())
    throw ArityMismatch("rep_of_vector: coordinate count mismatch");
  const Eigen::Index d = rep.images.empty()
                             ? static_cast<Eigen::Index>(rep.dimension)
                             : rep.images[0].rows();
  long long half_exp = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      half_exp -= t[i] * t[j] * rep.omega[i][j];
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(d, d);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    Eigen::MatrixXcd G = rep.images[i];
    long long n = t[i];
    if (n < 0) {
      G = G.inverse().eval();
      n = -n;
    }
    for (long long k = 0; k < n; ++k) M = M * G;
  }
  const std::complex<double> phase =
      std::polar(1.0, std::arg(rep.root.half_value()) * static_cast<double>(half_exp));
  return phase * M;
}

CentralCharacter central_character(const MatrixRep& rep,
                                   const std::vector<std::vector<long long>>& extra) {
  CentralCharacter ch;
  const Eigen::Index d = rep.images.empty()
                             ? static_cast<Eigen::Index>(rep.dimension)
                             : rep.images[0].rows();
  auto schur_scalar = [&](const std::vector<long long>& t) {
    const Eigen::MatrixXcd M = rep_of_vector(rep, t);
    const std::complex<double> s = M.trace() / static_cast<double>(d);
    const Eigen::MatrixXcd res = M - s * Eigen::MatrixXcd::Identity(d, d);
    if (max_abs_entry(res) > 1e-8)
      throw NotScalar("central_character: image is not scalar");
    return s;
  };
  for (std::size_t i = 0; i < rep.rank(); ++i) {
    std::vector<long long> t(rep.rank(), 0);
    t[i] = rep.root.N;
    ch.values.push_back(schur_scalar(t));
  }
  for (const auto& t : extra) ch.values.push_back(schur_scalar(t));
  return ch;
}

std::vector<long long> express_in_basis(const std::vector<WeightVector>& basis,
                                        const WeightVector& w) {
  if (basis.empty()) throw TrackMismatch("express_in_basis: empty basis");
  const std::size_t rows = basis[0].size();
  IntMat M(rows, std::vector<BigInt>(basis.size(), 0));
  std::vector<BigInt> rhs(rows, 0);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) M[r][c] = basis[c][r];
  for (std::size_t r = 0; r < rows; ++r) rhs[r] = w[r];
  const auto x = solve_integer(M, rhs);
  if (x.empty())
    throw TrackMismatch("express_in_basis: vector is not in the lattice");
  std::vector<long long> out;
  for (const auto& v : x) out.push_back(static_cast<long long>(v));
  return out;
}

}  // namespace skeinlab
