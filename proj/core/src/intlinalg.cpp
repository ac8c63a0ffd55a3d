#include "skeinlab/intlinalg.hpp"

#include <numeric>

namespace skeinlab {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// extended gcd: returns g and writes u, v with u*a + v*b = g
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
  if (b == 0) {
    u = a >= 0 ? 1 : -1;
    v = 0;
    return a >= 0 ? a : -a;
  }
  BigInt u1, v1;
  const BigInt g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = big_gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

}  // namespace

std::vector<std::vector<BigInt>> integer_kernel(const IntMat& M, std::size_t cols) {
  const std::size_t rows = M.size();
  IntMat A(rows, std::vector<BigInt>(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < std::min(cols, M[r].size()); ++c) A[r][c] = M[r][c];

  // column transform U with A_reduced = M * U throughout
  IntMat U(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) U[c][c] = 1;

  auto col_combine = [&](std::size_t j, std::size_t k, const BigInt& u,
                         const BigInt& v, const BigInt& s, const BigInt& t) {
    // (col j, col k) <- (u*col j + v*col k, s*col j + t*col k)
    for (std::size_t r = 0; r < rows; ++r) {
      const BigInt aj = A[r][j], ak = A[r][k];
      A[r][j] = u * aj + v * ak;
      A[r][k] = s * aj + t * ak;
    }
    for (std::size_t r = 0; r < cols; ++r) {
      const BigInt uj = U[r][j], uk = U[r][k];
      U[r][j] = u * uj + v * uk;
      U[r][k] = s * uj + t * uk;
    }
  };

  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // clear row r to a single pivot among columns lead..cols-1
    std::size_t pivot = cols;
    for (std::size_t c = lead; c < cols; ++c)
      if (A[r][c] != 0) {
        pivot = c;
        break;
      }
    if (pivot == cols) continue;
    for (std::size_t c = pivot + 1; c < cols; ++c) {
      if (A[r][c] == 0) continue;
      BigInt u, v;
      const BigInt a = A[r][pivot], b = A[r][c];
      const BigInt g = ext_gcd(a, b, u, v);
      // unimodular: det(u v; -b/g a/g) = (u*a + v*b)/g = 1
      col_combine(pivot, c, u, v, -b / g, a / g);
    }
    if (pivot != lead) {
      for (std::size_t rr = 0; rr < rows; ++rr) std::swap(A[rr][pivot], A[rr][lead]);
      for (std::size_t rr = 0; rr < cols; ++rr) std::swap(U[rr][pivot], U[rr][lead]);
    }
    ++lead;
  }

  std::vector<std::vector<BigInt>> basis;
  for (std::size_t c = lead; c < cols; ++c) {
    std::vector<BigInt> v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = U[r][c];
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

int integer_rank(IntMat M) {
  const std::size_t rows = M.size();
  if (rows == 0) return 0;
  const std::size_t cols = M[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (M[r][c] == 0) continue;
      const BigInt f1 = M[row][c], f2 = M[r][c];
      for (std::size_t cc = c; cc < cols; ++cc)
        M[r][cc] = M[r][cc] * f1 - M[row][cc] * f2;
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<BigInt> solve_integer(const IntMat& M, const std::vector<BigInt>& rhs) {
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t rows = M.size();
  if (rows == 0 || rows != rhs.size()) return {};
  const std::size_t cols = M[0].size();
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) A[r][c] = Rational(M[r][c]);
    A[r][cols] = Rational(rhs[r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[row]);
    const Rational inv = A[row][c];
    for (std::size_t cc = c; cc <= cols; ++cc) A[row][cc] /= inv;
    for (std::size_t r2 = 0; r2 < rows; ++r2) {
      if (r2 == row || A[r2][c] == 0) continue;
      const Rational f = A[r2][c];
      for (std::size_t cc = c; cc <= cols; ++cc) A[r2][cc] -= f * A[row][cc];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (A[r][cols] != 0) return {};  // inconsistent
  std::vector<BigInt> x(cols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    const Rational& val = A[r][cols];
    if (boost::multiprecision::denominator(val) != 1) return {};  // not integral
    x[pivot_col[r]] = boost::multiprecision::numerator(val);
  }
  return x;
}

}  // namespace skeinlab
