#pragma once

#include <complex>
#include <cstdint>

namespace skeinlab {

/// Deterministic xoshiro-style generator with portable output, so seeded
/// reports are byte-identical across platforms and standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);
  /// Uniform on the annulus r in [0.5, 1.5] (well away from 0).
  std::complex<double> nonzero_complex();
  /// Standard-normal-ish value via sum of uniforms (deterministic, portable).
  double gaussian();

private:
  std::uint64_t s_[4];
};

}  // namespace skeinlab
