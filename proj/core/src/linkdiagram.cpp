#include "skeinlab/linkdiagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

namespace skeinlab {

namespace {

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    int root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      int next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  }
  // returns true if already in the same class
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    parent[b] = a;
    return false;
  }
};

std::array<std::array<int, 2>, 2> smoothing_pairs(Smoothing mode) {
  if (mode == Smoothing::Zero) return {{{0, 3}, {1, 2}}};
  return {{{0, 1}, {2, 3}}};
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  validate();
}

void LinkDiagram::validate() {
  if (free_loops_ < 0) throw MalformedPD("free_loops must be >= 0");
  std::map<int, int> count;
  for (const auto& c : crossings_)
    for (int a : c) {
      if (a <= 0) throw MalformedPD("arc identifiers must be positive");
      ++count[a];
    }
  std::vector<int> singles;
  for (const auto& [arc, n] : count) {
    if (n == 1)
      singles.push_back(arc);
    else if (n != 2)
      throw MalformedPD("arc " + std::to_string(arc) + " appears " +
                        std::to_string(n) + " times (expected 2)");
  }
  if (singles.size() == 2) {
    // one open strand: join its two ends into a single arc label
    int keep = singles[0], drop = singles[1];
    for (auto& c : crossings_)
      for (int& a : c)
        if (a == drop) a = keep;
  } else if (!singles.empty()) {
    throw MalformedPD("arcs with a single occurrence cannot be closed");
  }
}

LinkDiagram LinkDiagram::parse_pd(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("crossings"))
    throw SchemaError("PD document must be an object with a 'crossings' array");
  if (!j["crossings"].is_array())
    throw SchemaError("'crossings' must be an array");
  std::vector<Crossing> crossings;
  for (const auto& t : j["crossings"]) {
    if (!t.is_array() || t.size() != 4)
      throw SchemaError("each crossing must be a 4-tuple of arc ids");
    Crossing c{};
    for (int i = 0; i < 4; ++i) {
      if (!t[i].is_number_integer()) throw SchemaError("arc ids must be integers");
      c[static_cast<std::size_t>(i)] = t[i].get<int>();
    }
    crossings.push_back(c);
  }
  int free_loops = 0;
  if (j.contains("free_loops")) {
    if (!j["free_loops"].is_number_integer())
      throw SchemaError("'free_loops' must be an integer");
    free_loops = j["free_loops"].get<int>();
  }
  return LinkDiagram(std::move(crossings), free_loops);
}

int LinkDiagram::component_count() const {
  // strands pass through each crossing as slot pairs (0,2) and (1,3)
  UnionFind uf;
  for (const auto& c : crossings_) {
    uf.unite(c[0], c[2]);
    uf.unite(c[1], c[3]);
  }
  std::map<int, bool> roots;
  for (const auto& c : crossings_)
    for (int a : c) roots[uf.find(a)] = true;
  return static_cast<int>(roots.size()) + free_loops_;
}

LinkDiagram LinkDiagram::resolve_crossing(std::size_t ci, Smoothing mode) const {
  if (ci >= crossings_.size())
    throw std::out_of_range("resolve_crossing: crossing index out of range");
  const Crossing target = crossings_[ci];

  UnionFind uf;
  std::map<int, int> remaining;  // class root -> open occurrence count
  auto rem_of = [&](int arc) -> int& {
    int r = uf.find(arc);
    auto it = remaining.find(r);
    if (it == remaining.end()) it = remaining.emplace(r, 2).first;
    return it->second;
  };

  int closed = 0;
  for (const auto& pr : smoothing_pairs(mode)) {
    int u = target[static_cast<std::size_t>(pr[0])];
    int v = target[static_cast<std::size_t>(pr[1])];
    if (uf.find(u) == uf.find(v)) {
      int& r = rem_of(u);
      r -= 2;
      if (r == 0) ++closed;
    } else {
      int ru = rem_of(u), rv = rem_of(v);
      remaining.erase(uf.find(u));
      remaining.erase(uf.find(v));
      uf.unite(u, v);
      remaining[uf.find(u)] = ru + rv - 2;
    }
  }

  std::vector<Crossing> rest;
  rest.reserve(crossings_.size() - 1);
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    if (i == ci) continue;
    Crossing c = crossings_[i];
    for (int& a : c) a = uf.find(a);
    rest.push_back(c);
  }
  return LinkDiagram(std::move(rest), free_loops_ + closed);
}

LinkDiagram braid_closure(const std::vector<int>& word, int strands) {
  if (strands < 1) throw MalformedPD("braid_closure: need at least one strand");
  std::vector<int> init(static_cast<std::size_t>(strands));
  std::iota(init.begin(), init.end(), 1);
  std::vector<int> cur = init;
  int next_id = strands + 1;

  std::vector<LinkDiagram::Crossing> crossings;
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands)
      throw MalformedPD("braid_closure: letter out of range");
    const int a = cur[static_cast<std::size_t>(i)];
    const int b = cur[static_cast<std::size_t>(i + 1)];
    const int c = next_id++;  // outgoing left
    const int d = next_id++;  // outgoing right
    // slots clockwise from the incoming under-strand; the under-strand
    // occupies slots 0 and 2
    if (letter > 0)
      crossings.push_back({a, c, d, b});
    else
      crossings.push_back({b, a, c, d});
    cur[static_cast<std::size_t>(i)] = c;
    cur[static_cast<std::size_t>(i + 1)] = d;
  }

  int free_loops = 0;
  for (int pos = 0; pos < strands; ++pos) {
    const int top = cur[static_cast<std::size_t>(pos)];
    const int bottom = init[static_cast<std::size_t>(pos)];
    if (top == bottom) {
      ++free_loops;  // position never crossed
      continue;
    }
    for (auto& c : crossings)
      for (int& arc : c)
        if (arc == top) arc = bottom;
  }
  return LinkDiagram(std::move(crossings), free_loops);
}

}  // namespace skeinlab
