#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "skeinlab/qtorus.hpp"
#include "skeinlab/qtrace.hpp"
#include "skeinlab/traintrack.hpp"

using namespace skeinlab;
using skeinlab::test::data_path;
using skeinlab::test::slurp;

namespace {

struct Surface {
  const char* file;
  int genus, punctures;
};

const Surface kCorpus[] = {
    {"punctured_torus.json", 1, 1},
    {"three_punctured_sphere.json", 0, 3},
    {"four_punctured_sphere.json", 0, 4},
    {"two_punctured_torus.json", 1, 2},
};

Triangulation load(const char* file) { return load_triangulation(slurp(data_path(file))); }

WeightVector combine(const std::vector<WeightVector>& basis,
                     const std::vector<long long>& coeffs) {
  WeightVector w(basis[0].size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += coeffs[i] * basis[i][j];
  return w;
}

}  // namespace

TEST_CASE("triangulation validation") {
  for (const auto& s : kCorpus) {
    const Triangulation T = load(s.file);
    CHECK(T.genus == s.genus);
    CHECK(T.punctures == s.punctures);
    CHECK(T.triangle_count() == 4 * s.genus + 2 * s.punctures - 4);
    CHECK(T.edge_count() == 6 * s.genus + 3 * s.punctures - 6);
    CHECK(T.vertex_count == s.punctures);
  }

  // wrong Euler count
  CHECK_THROWS_AS(
      load_triangulation(
          R"({"genus":0,"punctures":3,"triangles":[[0,1,2]],"gluings":[]})"),
      EulerMismatch);
  // a side glued to itself
  CHECK_THROWS_AS(
      load_triangulation(
          R"({"genus":1,"punctures":1,"triangles":[[0,1,2],[2,0,1]],
              "gluings":[[0,0,0,0],[0,1,1,2],[0,2,1,0]]})"),
      SelfLoopEdge);
  CHECK_THROWS_AS(load_triangulation("[]"), SchemaError);
}

TEST_CASE("weight lattice rank equals 6g + 3p - 6 across the corpus") {
  for (const auto& s : kCorpus) {
    const Triangulation T = load(s.file);
    const TrainTrack tt = build_train_track(T);
    CHECK(tt.branch_count == 3 * T.triangle_count());
    CHECK(tt.switch_count() == T.edge_count());
    const auto basis = weight_basis(tt);
    CHECK(static_cast<int>(basis.size()) == 6 * s.genus + 3 * s.punctures - 6);
    for (const auto& b : basis) CHECK(satisfies_switch_conditions(tt, b));
  }
}

TEST_CASE("edge coordinates and edge vectors") {
  for (const auto& s : kCorpus) {
    const TrainTrack tt = build_train_track(load(s.file));
    for (int e = 0; e < tt.switch_count(); ++e) {
      const WeightVector w = edge_vector(tt, e);
      CHECK(satisfies_switch_conditions(tt, w));
      CHECK(even_parity(tt, w));
      const auto coords = edge_coordinates(tt, w);
      for (int f = 0; f < tt.switch_count(); ++f)
        CHECK(coords[static_cast<std::size_t>(f)] == (f == e ? 2 : 0));
    }
  }
}

TEST_CASE("Thurston form matches the corner-count oracle on edge vectors") {
  for (const auto& s : kCorpus) {
    const Triangulation T = load(s.file);
    const TrainTrack tt = build_train_track(T);
    for (int i = 0; i < tt.switch_count(); ++i) {
      const WeightVector wi = edge_vector(tt, i);
      for (int j = 0; j < tt.switch_count(); ++j) {
        const WeightVector wj = edge_vector(tt, j);
        const long long oracle =
            -4LL * (corner_count(T, i, j) - corner_count(T, j, i));
        CHECK(thurston_form(tt, wi, wj) == oracle);
      }
    }
  }
}

TEST_CASE("Thurston form is antisymmetric and bilinear") {
  Rng rng(31);
  for (const auto& s : kCorpus) {
    const TrainTrack tt = build_train_track(load(s.file));
    const auto basis = weight_basis(tt);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<long long> ca, cb, cc;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        ca.push_back(static_cast<long long>(rng.next_below(7)) - 3);
        cb.push_back(static_cast<long long>(rng.next_below(7)) - 3);
        cc.push_back(static_cast<long long>(rng.next_below(7)) - 3);
      }
      const WeightVector a = combine(basis, ca);
      const WeightVector b = combine(basis, cb);
      const WeightVector c = combine(basis, cc);
      CHECK(thurston_form(tt, a, b) == -thurston_form(tt, b, a));
      WeightVector bc = b;
      for (std::size_t j = 0; j < bc.size(); ++j) bc[j] += c[j];
      CHECK(thurston_form(tt, a, bc) ==
            thurston_form(tt, a, b) + thurston_form(tt, a, c));
      CHECK(thurston_form(tt, a, a) == 0);
    }
  }
}

TEST_CASE("curves crossing once pair to +-2 on the punctured torus") {
  const Triangulation T = load("punctured_torus.json");
  const TrainTrack tt = build_train_track(T);
  // the three simple curves cross edge pairs {1,2}, {0,2}, {0,1} once each;
  // any two of the curves meet in a single point
  std::vector<WeightVector> curves;
  for (auto coords : {std::vector<long long>{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) {
    const WeightVector w = lattice_from_edge_coords(tt, coords);
    CHECK(edge_coordinates(tt, w) == coords);
    curves.push_back(w);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(std::abs(thurston_form(tt, curves[i], curves[j])) == 2);
}

TEST_CASE("puncture vectors are central for the form") {
  for (const auto& s : kCorpus) {
    const Triangulation T = load(s.file);
    const TrainTrack tt = build_train_track(T);
    const auto basis = weight_basis(tt);
    for (int i = 0; i < T.punctures; ++i) {
      const WeightVector pv = puncture_vector(T, i);
      CHECK(satisfies_switch_conditions(tt, pv));
      for (const auto& b : basis) CHECK(thurston_form(tt, pv, b) == 0);
    }
  }
}

TEST_CASE("punctured torus puncture vector is the all-ones loop") {
  const Triangulation T = load("punctured_torus.json");
  const WeightVector pv = puncture_vector(T, 0);
  REQUIRE(pv.size() == 6);
  for (long long w : pv) CHECK(w == 1);
  const TrainTrack tt = build_train_track(T);
  const auto coords = edge_coordinates(tt, pv);
  for (long long c : coords) CHECK(c == 2);
}
