#pragma once

#include <complex>

namespace skeinlab {

using Complex = std::complex<double>;

/// 2x2 complex matrix with the operations needed for SL2(C) holonomy work.
struct Mat2 {
  Complex a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  static Mat2 identity() { return {}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator*(Complex s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 operator+(const Mat2& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }

  /// Inverse of a determinant-1 matrix.
  Mat2 inverse_sl2() const { return {d, -b, -c, a}; }

  double norm_inf() const {
    double m = std::abs(a);
    m = std::max(m, std::abs(b));
    m = std::max(m, std::abs(c));
    m = std::max(m, std::abs(d));
    return m;
  }
};

inline Mat2 operator*(Complex s, const Mat2& m) { return m * s; }

}  // namespace skeinlab
