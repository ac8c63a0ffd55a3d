#pragma once

#include <array>
#include <utility>

#include "skeinlab/qtorus.hpp"
#include "skeinlab/triangulation.hpp"

namespace skeinlab {

/// The standard once-punctured-torus triangulation used throughout: two
/// triangles, edge 0 horizontal, edge 1 vertical, edge 2 diagonal.
const Triangulation& standard_punctured_torus();

/// Quantum-torus images of the three skein generators on the punctured
/// torus, found by constraint search: Y_i satisfies the presented relations
/// exactly under qt_multiply, and specializes at A = 1 to the classical
/// trace polynomial of its curve under the lattice-to-edge-monomial map.
struct QuantumTrace {
  TrainTrack track;
  std::vector<WeightVector> basis;
  std::array<QTorusElement, 3> Y;
  std::array<std::pair<long, long>, 3> curves;
};

/// Runs the search (cached after the first call); SearchExhausted when no
/// element within the coefficient bound satisfies the constraints.
const QuantumTrace& quantum_trace_pt();

/// Switch-condition weight vector with the prescribed edge coordinates;
/// TrackMismatch when no integer solution exists.
WeightVector lattice_from_edge_coords(const TrainTrack& tt,
                                      const std::vector<long long>& coords);

}  // namespace skeinlab
