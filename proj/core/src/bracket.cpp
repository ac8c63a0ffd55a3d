#include "skeinlab/bracket.hpp"

#include <cstdlib>
#include <map>
#include <thread>
#include <vector>

namespace skeinlab {

LaurentHalf loop_value() {
  return -(LaurentHalf::A(2) + LaurentHalf::A(-2));
}

namespace {

int thread_budget() {
  if (const char* env = std::getenv("SKEINLAB_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// (signed A-exponent, loop count) -> number of states
using StateTable = std::map<std::pair<int, int>, BigInt>;

StateTable enumerate_range(const std::vector<LinkDiagram::Crossing>& crossings,
                           const std::vector<int>& arc_index, int arc_count,
                           std::uint64_t begin, std::uint64_t end) {
  const int n = static_cast<int>(crossings.size());
  StateTable table;
  std::vector<int> parent(static_cast<std::size_t>(arc_count));
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::uint64_t state = begin; state < end; ++state) {
    for (int i = 0; i < arc_count; ++i) parent[static_cast<std::size_t>(i)] = i;
    int exponent = 0;
    for (int i = 0; i < n; ++i) {
      const auto& c = crossings[static_cast<std::size_t>(i)];
      const bool infinity = (state >> i) & 1u;
      exponent += infinity ? 1 : -1;
      int p0, p1, q0, q1;
      if (infinity) {  // joins slots (0,1) and (2,3)
        p0 = c[0]; p1 = c[1]; q0 = c[2]; q1 = c[3];
      } else {  // ZERO joins slots (0,3) and (1,2)
        p0 = c[0]; p1 = c[3]; q0 = c[1]; q1 = c[2];
      }
      int a = find(arc_index[static_cast<std::size_t>(p0)]);
      int b = find(arc_index[static_cast<std::size_t>(p1)]);
      parent[static_cast<std::size_t>(b)] = a;
      a = find(arc_index[static_cast<std::size_t>(q0)]);
      b = find(arc_index[static_cast<std::size_t>(q1)]);
      parent[static_cast<std::size_t>(b)] = a;
    }
    int loops = 0;
    for (int i = 0; i < arc_count; ++i)
      if (find(i) == i) ++loops;
    table[{exponent, loops}] += 1;
  }
  return table;
}

}  // namespace

LaurentHalf kauffman_bracket(const LinkDiagram& d, int max_crossings) {
  const int n = static_cast<int>(d.crossing_count());
  if (n > max_crossings)
    throw CapacityError("kauffman_bracket: " + std::to_string(n) +
                        " crossings exceeds the capacity bound of " +
                        std::to_string(max_crossings));

  // dense arc indexing
  int max_arc = 0;
  for (const auto& c : d.crossings())
    for (int a : c) max_arc = std::max(max_arc, a);
  std::vector<int> arc_index(static_cast<std::size_t>(max_arc) + 1, -1);
  int arc_count = 0;
  for (const auto& c : d.crossings())
    for (int a : c)
      if (arc_index[static_cast<std::size_t>(a)] < 0)
        arc_index[static_cast<std::size_t>(a)] = arc_count++;

  const std::uint64_t total = 1ULL << n;
  StateTable table;
  int threads = std::min<int>(thread_budget(), 8);
  if (n < 12 || threads <= 1) {
    table = enumerate_range(d.crossings(), arc_index, arc_count, 0, total);
  } else {
    std::vector<StateTable> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(threads) - 1) /
                                static_cast<std::uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&, t, lo, hi] {
        parts[static_cast<std::size_t>(t)] =
            enumerate_range(d.crossings(), arc_index, arc_count, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (const auto& [key, count] : part) table[key] += count;
  }

  // assemble: sum over (exponent, loops) of count * A^exponent * delta^loops
  int max_loops = 0;
  for (const auto& [key, count] : table) max_loops = std::max(max_loops, key.second);
  std::vector<LaurentHalf> delta_pow(static_cast<std::size_t>(max_loops) + 1);
  delta_pow[0] = LaurentHalf::one();
  const LaurentHalf delta = loop_value();
  for (int m = 1; m <= max_loops; ++m)
    delta_pow[static_cast<std::size_t>(m)] =
        delta_pow[static_cast<std::size_t>(m - 1)] * delta;

  LaurentHalf result;
  for (const auto& [key, count] : table) {
    result += LaurentHalf::A(key.first, count) *
              delta_pow[static_cast<std::size_t>(key.second)];
  }
  // crossingless free loops contribute one delta factor each
  for (int i = 0; i < d.free_loops(); ++i) result = result * delta;
  return result;
}

}  // namespace skeinlab
