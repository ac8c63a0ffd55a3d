#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "skeinlab/errors.hpp"

namespace skeinlab {

/// Ideal triangulation of a punctured surface. Triangle side i runs from
/// corner i to corner i+1 in the counterclockwise order; a gluing record
/// [t1,s1,t2,s2] identifies side s1 of t1 with side s2 of t2 reversing
/// orientation, so corner s1 matches corner s2+1 and corner s1+1 matches
/// corner s2.
struct Triangulation {
  int genus = 0;
  int punctures = 0;
  std::vector<std::array<int, 3>> triangles;  // edge id per side
  std::vector<std::array<int, 4>> gluings;    // [t1, s1, t2, s2]

  // derived at load time
  std::vector<std::array<std::pair<int, int>, 2>> edge_sides;  // per edge: the two (triangle, side)
  std::vector<int> corner_vertex;  // vertex class of corner c of triangle t at index 3t+c
  int vertex_count = 0;

  int triangle_count() const { return static_cast<int>(triangles.size()); }
  int edge_count() const { return static_cast<int>(edge_sides.size()); }
};

/// Parse and validate a triangulation from its JSON document:
/// {"genus":g,"punctures":p,"triangles":[[e,e,e],...],"gluings":[[t,s,t,s],...]}.
/// Rejects wrong Euler counts, edges without exactly two side incidences,
/// vertex classes not matching the puncture count, and sides glued to
/// themselves.
Triangulation load_triangulation(const std::string& json_text);

}  // namespace skeinlab
