#pragma once

#include "skeinlab/laurent.hpp"
#include "skeinlab/linkdiagram.hpp"

namespace skeinlab {

/// Loop value delta = -A^2 - A^{-2}, forced by the bracket axioms.
LaurentHalf loop_value();

/// Full Kauffman bracket state sum: every crossing expanded with coefficient
/// A^{-1} (ZERO) or A (INFINITY), each state of m closed loops contributing
/// delta^m, the empty link mapping to 1. Exact Laurent polynomial in A.
/// Diagrams with more than max_crossings crossings are rejected with a
/// CapacityError instead of thrashing.
LaurentHalf kauffman_bracket(const LinkDiagram& d, int max_crossings = 24);

}  // namespace skeinlab
