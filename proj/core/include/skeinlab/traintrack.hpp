#pragma once

#include <array>
#include <vector>

#include "skeinlab/intlinalg.hpp"
#include "skeinlab/triangulation.hpp"

namespace skeinlab {

/// Integer weight per branch of a train track.
using WeightVector = std::vector<long long>;

/// Train track dual to an ideal triangulation: branch 3t+c is the arc of
/// triangle t cutting corner c (joining the midpoints of sides (c+2)%3 and
/// c); one switch per triangulation edge. Left/right at a switch side are
/// fixed by the triangle's counterclockwise orientation: looking at side s
/// of triangle t from the edge, the arc cutting corner s+1 is on the left
/// and the arc cutting corner s is on the right.
struct TrainTrack {
  struct SwitchSide {
    int left_branch = -1;
    int right_branch = -1;
  };
  struct Switch {
    std::array<SwitchSide, 2> sides;
  };

  int genus = 0;
  int punctures = 0;
  int branch_count = 0;
  std::vector<Switch> switches;

  int switch_count() const { return static_cast<int>(switches.size()); }
};

TrainTrack build_train_track(const Triangulation& T);

/// True when the weight sums on the two sides of every switch agree.
bool satisfies_switch_conditions(const TrainTrack& tt, const WeightVector& w);

/// Per-edge coordinate of a switch-condition vector: the weight sum on one
/// side of the corresponding switch.
std::vector<long long> edge_coordinates(const TrainTrack& tt, const WeightVector& w);

/// Primitive integer basis of the switch-condition kernel; its size must be
/// 6g + 3p - 6, else RankMismatch.
std::vector<WeightVector> weight_basis(const TrainTrack& tt);

/// Thurston intersection form via the local switch rule, summed over both
/// sides of every switch. Normalization: two simple closed curves carried
/// with a single transverse crossing pair to +-2 (the factor of two makes
/// A^{omega/2} reproduce the Weyl commutation q^{2 sigma} with q = A^{-2}
/// on the even-parity edge monomials, and is forced by the presented
/// relations of the punctured-torus algebra).
long long thurston_form(const TrainTrack& tt, const WeightVector& a,
                        const WeightVector& b);

/// The even-parity edge-coordinate vector w_e: the unique switch-condition
/// vector whose edge coordinates are 2 on edge e and 0 elsewhere.
WeightVector edge_vector(const TrainTrack& tt, int e);

/// Ordered corner-count a_ij: number of triangle corners whose incoming edge
/// (counterclockwise) is i and outgoing edge is j. The oracle for the
/// Thurston form on edge vectors: omega(w_i, w_j) = -4 (a_ij - a_ji) under
/// this artifact's orientation and normalization conventions.
int corner_count(const Triangulation& T, int i, int j);

/// Weight vector of the train-track loop encircling puncture i: weight 1 on
/// every branch whose cut corner lies in that puncture's vertex class.
WeightVector puncture_vector(const Triangulation& T, int i);

}  // namespace skeinlab
