#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skeinlab/bracket.hpp"

using namespace skeinlab;
using skeinlab::test::data_path;
using skeinlab::test::random_braid;
using skeinlab::test::slurp;

namespace {

LinkDiagram load(const std::string& name) {
  return LinkDiagram::parse_pd(slurp(data_path(name)));
}

/// Disjoint union: shift the arc labels of the second diagram out of the way.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  int max_arc = 0;
  for (const auto& c : a.crossings())
    for (int arc : c) max_arc = std::max(max_arc, arc);
  std::vector<LinkDiagram::Crossing> crossings = a.crossings();
  for (auto c : b.crossings()) {
    for (int& arc : c) arc += max_arc;
    crossings.push_back(c);
  }
  return LinkDiagram(std::move(crossings), a.free_loops() + b.free_loops());
}

}  // namespace

TEST_CASE("PD parsing and validation") {
  const LinkDiagram hopf = load("hopf.json");
  CHECK(hopf.crossing_count() == 2);
  CHECK(hopf.component_count() == 2);

  const LinkDiagram kink = load("kink.json");
  CHECK(kink.crossing_count() == 1);
  CHECK(kink.component_count() == 1);

  CHECK_THROWS_AS(LinkDiagram::parse_pd("{\"crossings\": [[1,1,1,2]]}"), MalformedPD);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("not json"), SchemaError);
  CHECK_THROWS_AS(LinkDiagram::parse_pd("{\"crossings\": [[1,2,3]]}"), SchemaError);
}

TEST_CASE("resolve_crossing on the one-kink diagram") {
  const LinkDiagram kink = load("kink.json");
  const LinkDiagram zero = kink.resolve_crossing(0, Smoothing::Zero);
  CHECK(zero.crossing_count() == 0);
  CHECK(zero.component_count() == 1);
  const LinkDiagram inf = kink.resolve_crossing(0, Smoothing::Infinity);
  CHECK(inf.crossing_count() == 0);
  CHECK(inf.component_count() == 2);
  CHECK_THROWS(load("empty.json").resolve_crossing(0, Smoothing::Zero));
}

TEST_CASE("frozen bracket oracles") {
  // values cross-checked against an independent state-sum implementation
  const LaurentHalf delta = loop_value();
  CHECK(kauffman_bracket(load("empty.json")) == LaurentHalf::one());
  CHECK(kauffman_bracket(load("unknot.json")) == delta);
  CHECK(kauffman_bracket(load("kink.json")) ==
        LaurentHalf::A(5) + LaurentHalf::A(1));
  // one positive kink contributes exactly the framing factor -A^3
  CHECK(kauffman_bracket(load("kink.json")) == -LaurentHalf::A(3) * delta);
  CHECK(kauffman_bracket(load("hopf.json")) ==
        LaurentHalf::A(6) + LaurentHalf::A(2) + LaurentHalf::A(-2) +
            LaurentHalf::A(-6));
  CHECK(kauffman_bracket(load("trefoil.json")) ==
        -LaurentHalf::A(9) + LaurentHalf::A(1) + LaurentHalf::A(-3) +
            LaurentHalf::A(-7));
}

TEST_CASE("crossingless diagrams at A = -1 give (-2)^k") {
  for (int k = 0; k <= 4; ++k) {
    const LinkDiagram d({}, k);
    const auto v =
        kauffman_bracket(d).eval_half(std::complex<double>(0.0, 1.0));  // A = -1
    double expect = 1.0;
    for (int i = 0; i < k; ++i) expect *= -2.0;
    CHECK(std::abs(v - expect) < 1e-12);
  }
}

TEST_CASE("skein relation holds at every crossing of a 50-diagram corpus") {
  Rng rng(11);
  const LaurentHalf A = LaurentHalf::A(1);
  const LaurentHalf Ainv = LaurentHalf::A(-1);
  int diagrams = 0;
  while (diagrams < 50) {
    const int strands = 2 + static_cast<int>(rng.next_below(3));
    const int len = 1 + static_cast<int>(rng.next_below(10));
    const LinkDiagram d = braid_closure(random_braid(rng, strands, len), strands);
    if (d.crossing_count() == 0) continue;
    ++diagrams;
    const LaurentHalf whole = kauffman_bracket(d);
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      const LaurentHalf zero = kauffman_bracket(d.resolve_crossing(c, Smoothing::Zero));
      const LaurentHalf inf =
          kauffman_bracket(d.resolve_crossing(c, Smoothing::Infinity));
      CHECK(whole == Ainv * zero + A * inf);
    }
  }
}

TEST_CASE("disjoint-union multiplicativity") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const LinkDiagram a = braid_closure(random_braid(rng, 2, 3), 2);
    const LinkDiagram b = braid_closure(random_braid(rng, 3, 4), 3);
    CHECK(kauffman_bracket(disjoint_union(a, b)) ==
          kauffman_bracket(a) * kauffman_bracket(b));
  }
}

TEST_CASE("Reidemeister II invariance across a braid-move corpus") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const int strands = 2 + static_cast<int>(rng.next_below(3));
    std::vector<int> word = random_braid(rng, strands, 4);
    std::vector<int> moved = word;
    const int gen =
        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(strands - 1)));
    const auto at = static_cast<std::ptrdiff_t>(rng.next_below(word.size() + 1));
    moved.insert(moved.begin() + at, {gen, -gen});
    CHECK(kauffman_bracket(braid_closure(word, strands)) ==
          kauffman_bracket(braid_closure(moved, strands)));
  }
}

TEST_CASE("Reidemeister III invariance across a braid-move corpus") {
  Rng rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const int strands = 3 + static_cast<int>(rng.next_below(2));
    std::vector<int> prefix = random_braid(rng, strands, 3);
    const int i =
        1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(strands - 2)));
    std::vector<int> lhs = prefix, rhs = prefix;
    lhs.insert(lhs.end(), {i, i + 1, i});
    rhs.insert(rhs.end(), {i + 1, i, i + 1});
    CHECK(kauffman_bracket(braid_closure(lhs, strands)) ==
          kauffman_bracket(braid_closure(rhs, strands)));
  }
}

TEST_CASE("capacity guard") {
  // 26 crossings of sigma_1 alternating sign stay a valid diagram but are
  // over the enumeration cap
  std::vector<int> word;
  for (int i = 0; i < 26; ++i) word.push_back(i % 2 == 0 ? 1 : -1);
  const LinkDiagram d = braid_closure(word, 2);
  CHECK_THROWS_AS(kauffman_bracket(d), CapacityError);
}
