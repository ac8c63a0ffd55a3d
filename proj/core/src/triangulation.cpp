#include "skeinlab/triangulation.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

namespace skeinlab {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] =
        parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  parent[static_cast<std::size_t>(find_root(parent, b))] = find_root(parent, a);
}

}  // namespace

Triangulation load_triangulation(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("genus") || !j.contains("punctures") ||
      !j.contains("triangles") || !j.contains("gluings"))
    throw SchemaError("triangulation: need genus, punctures, triangles, gluings");

  Triangulation T;
  T.genus = j["genus"].get<int>();
  T.punctures = j["punctures"].get<int>();
  if (T.genus < 0 || T.punctures < 1)
    throw SchemaError("triangulation: genus must be >= 0 and punctures >= 1");

  for (const auto& t : j["triangles"]) {
    if (!t.is_array() || t.size() != 3)
      throw SchemaError("triangulation: each triangle lists 3 edge ids");
    T.triangles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  }
  for (const auto& g : j["gluings"]) {
    if (!g.is_array() || g.size() != 4)
      throw SchemaError("triangulation: each gluing is [t1,s1,t2,s2]");
    T.gluings.push_back(
        {g[0].get<int>(), g[1].get<int>(), g[2].get<int>(), g[3].get<int>()});
  }

  const int nt = T.triangle_count();
  const int expect_t = 4 * T.genus + 2 * T.punctures - 4;
  const int expect_e = 6 * T.genus + 3 * T.punctures - 6;
  if (nt != expect_t)
    throw EulerMismatch("triangulation: expected " + std::to_string(expect_t) +
                        " triangles, got " + std::to_string(nt));

  int max_edge = -1;
  for (const auto& t : T.triangles)
    for (int e : t) {
      if (e < 0) throw SchemaError("triangulation: negative edge id");
      max_edge = std::max(max_edge, e);
    }
  if (max_edge + 1 != expect_e)
    throw EulerMismatch("triangulation: expected " + std::to_string(expect_e) +
                        " edges, got ids up to " + std::to_string(max_edge));

  // collect the two side incidences of every edge, checking gluing consistency
  std::vector<std::vector<std::pair<int, int>>> sides(
      static_cast<std::size_t>(expect_e));
  std::vector<int> glued(static_cast<std::size_t>(nt) * 3, 0);
  for (const auto& g : T.gluings) {
    const int t1 = g[0], s1 = g[1], t2 = g[2], s2 = g[3];
    if (t1 < 0 || t1 >= nt || t2 < 0 || t2 >= nt || s1 < 0 || s1 > 2 || s2 < 0 ||
        s2 > 2)
      throw SchemaError("triangulation: gluing indices out of range");
    const int e1 = T.triangles[static_cast<std::size_t>(t1)][static_cast<std::size_t>(s1)];
    const int e2 = T.triangles[static_cast<std::size_t>(t2)][static_cast<std::size_t>(s2)];
    if (e1 != e2)
      throw SchemaError("triangulation: glued sides carry different edge ids");
    if (t1 == t2 && s1 == s2)
      throw SelfLoopEdge("triangulation: side (" + std::to_string(t1) + "," +
                         std::to_string(s1) + ") glued to itself");
    glued[static_cast<std::size_t>(t1) * 3 + static_cast<std::size_t>(s1)] += 1;
    glued[static_cast<std::size_t>(t2) * 3 + static_cast<std::size_t>(s2)] += 1;
    sides[static_cast<std::size_t>(e1)].push_back({t1, s1});
    sides[static_cast<std::size_t>(e1)].push_back({t2, s2});
  }
  for (int c = 0; c < nt * 3; ++c)
    if (glued[static_cast<std::size_t>(c)] != 1)
      throw SchemaError("triangulation: every triangle side must be glued exactly once");
  for (int e = 0; e < expect_e; ++e) {
    if (sides[static_cast<std::size_t>(e)].size() != 2)
      throw SchemaError("triangulation: edge " + std::to_string(e) +
                        " must have exactly two side incidences");
    T.edge_sides.push_back({sides[static_cast<std::size_t>(e)][0],
                            sides[static_cast<std::size_t>(e)][1]});
  }

  // vertex classes: corners identified across gluings (side s1 corner s1
  // matches corner s2+1, corner s1+1 matches corner s2)
  std::vector<int> parent(static_cast<std::size_t>(nt) * 3);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : T.gluings) {
    const int t1 = g[0], s1 = g[1], t2 = g[2], s2 = g[3];
    unite(parent, t1 * 3 + s1, t2 * 3 + (s2 + 1) % 3);
    unite(parent, t1 * 3 + (s1 + 1) % 3, t2 * 3 + s2);
  }
  std::vector<int> label(static_cast<std::size_t>(nt) * 3, -1);
  int classes = 0;
  T.corner_vertex.resize(static_cast<std::size_t>(nt) * 3);
  for (int c = 0; c < nt * 3; ++c) {
    const int r = find_root(parent, c);
    if (label[static_cast<std::size_t>(r)] < 0)
      label[static_cast<std::size_t>(r)] = classes++;
    T.corner_vertex[static_cast<std::size_t>(c)] = label[static_cast<std::size_t>(r)];
  }
  T.vertex_count = classes;
  if (classes != T.punctures)
    throw EulerMismatch("triangulation: found " + std::to_string(classes) +
                        " vertex classes for " + std::to_string(T.punctures) +
                        " punctures");

  return T;
}

}  // namespace skeinlab
