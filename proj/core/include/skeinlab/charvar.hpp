#pragma once

#include <string>
#include <vector>

#include "skeinlab/errors.hpp"
#include "skeinlab/sl2.hpp"

namespace skeinlab {

/// Assignment of SL2(C) matrices to the free generators of pi_1 of a
/// punctured surface.
struct SL2Rep {
  std::vector<Mat2> matrices;

  std::size_t rank() const { return matrices.size(); }
  /// Largest |det - 1| over the generators.
  double det_defect() const;

  static SL2Rep from_json(const std::string& json_text);
  std::string to_json() const;
};

/// Word in the free generators: sequence of (generator index, exponent +-1).
struct GroupWord {
  std::vector<std::pair<int, int>> letters;

  static GroupWord parse(const std::string& text);  // e.g. "abA" or "a b a^-1"
  GroupWord inverse() const;
};

/// Z2-valued cocycle on the free generators (one sign bit per generator).
struct Z2Cocycle {
  std::vector<int> signs;  // entries in {0,1}

  int evaluate(const GroupWord& w) const;  // total Z2-degree of the word
};

Mat2 word_matrix(const GroupWord& w, const SL2Rep& r);
Complex trace_word(const GroupWord& w, const SL2Rep& r);

/// |Tr(MN) + Tr(MN^{-1}) - Tr(M)Tr(N)| for determinant-1 matrices.
double trace_identity_check(const Mat2& M, const Mat2& N);

/// (-1)^n times the product of the component traces; the empty link is 1.
Complex bullock_value(const std::vector<GroupWord>& components, const SL2Rep& r);

/// Twist by a Z2 cocycle: generator i goes to (-1)^{signs[i]} times itself.
SL2Rep twist_rep(const SL2Rep& r, const Z2Cocycle& alpha);

/// Trace of the primitive (p,q) curve on the once-punctured torus, computed
/// by Farey-neighbor recursion from the seeds x = Tr(a), y = Tr(b),
/// z = Tr(ab). Requires gcd(p,q) = 1 and a rank-2 representation.
Complex fricke_trace(long p, long q, const SL2Rep& r);

/// Explicit primitive word representing the (p,q) curve (Christoffel word,
/// with inverse letters for negative coordinates); the matrix-product oracle
/// for fricke_trace.
GroupWord pq_word(long p, long q);

/// All reduced words of length <= max_len in two generators (the fixed word
/// corpus used for trace-equivalence testing).
std::vector<GroupWord> reduced_words_rank2(int max_len);

}  // namespace skeinlab
