#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skeinlab/rng.hpp"
#include "skeinlab/sl2.hpp"

namespace skeinlab::test {

inline std::string data_path(const std::string& name) {
  return std::string(SKEINLAB_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

/// Seeded random determinant-1 matrix with entries of moderate size.
inline Mat2 random_sl2(Rng& rng) {
  for (;;) {
    const Complex a(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    const Complex b(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    const Complex c(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    if (std::abs(a) < 0.2) continue;
    const Complex d = (Complex(1.0) + b * c) / a;
    return Mat2{a, b, c, d};
  }
}

/// Seeded braid word on `strands` strands with `len` letters.
inline std::vector<int> random_braid(Rng& rng, int strands, int len) {
  std::vector<int> word;
  for (int j = 0; j < len; ++j) {
    const int gen =
        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(strands - 1)));
    word.push_back(rng.next_below(2) == 0 ? gen : -gen);
  }
  return word;
}

}  // namespace skeinlab::test
