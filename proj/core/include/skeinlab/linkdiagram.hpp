#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

enum class Smoothing { Zero, Infinity };

/// Combinatorial framed link diagram given by a PD code. Each crossing is a
/// 4-tuple of arc identifiers listed as (incoming-under, then clockwise);
/// the under-strand occupies slots 0 and 2. Framing is the vertical
/// (blackboard) convention, so Reidemeister I is not an invariance.
///
/// Crossing convention ledger: the ZERO smoothing joins slots (0,3) and
/// (1,2) and carries the coefficient A^{-1} in the skein relation; the
/// INFINITY smoothing joins (0,1) and (2,3) with coefficient A. This is the
/// classical Kauffman assignment with A and A^{-1} swapped; any consistent
/// choice satisfies the bracket axioms, and the regression tests pin this
/// one (a positive kink contributes the factor -A^3).
class LinkDiagram {
public:
  using Crossing = std::array<int, 4>;

  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  /// Parse and validate the JSON PD schema
  /// {"crossings": [[a,b,c,d], ...], "free_loops": n}.
  /// If exactly two arc identifiers appear exactly once, they are treated as
  /// the two ends of one strand and joined; any other arity defect is a
  /// MalformedPD error.
  static LinkDiagram parse_pd(const std::string& json_text);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  std::size_t crossing_count() const { return crossings_.size(); }

  /// Number of link components (free loops plus traced strands).
  int component_count() const;

  /// Diagram with crossing c replaced by the given smoothing.
  LinkDiagram resolve_crossing(std::size_t c, Smoothing mode) const;

  bool operator==(const LinkDiagram& o) const {
    return crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
  }

private:
  void validate();
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

/// Trace closure of a braid word on `strands` strands, as a PD diagram.
/// Letter +i (1 <= i < strands) crosses positions i and i+1 with the strand
/// entering on the left passing under; letter -i is the opposite sense.
/// Strands untouched by the word close into free loops.
LinkDiagram braid_closure(const std::vector<int>& word, int strands);

}  // namespace skeinlab
