#include "skeinlab/traintrack.hpp"

#include <stdexcept>
#include <string>

namespace skeinlab {

namespace {

int branch_id(int t, int corner) { return 3 * t + corner; }

void check_size(const TrainTrack& tt, const WeightVector& w, const char* who) {
  if (static_cast<int>(w.size()) != tt.branch_count)
    throw TrackMismatch(std::string(who) + ": weight vector has " +
                        std::to_string(w.size()) + " entries for a track with " +
                        std::to_string(tt.branch_count) + " branches");
}

}  // namespace

TrainTrack build_train_track(const Triangulation& T) {
  TrainTrack tt;
  tt.genus = T.genus;
  tt.punctures = T.punctures;
  tt.branch_count = 3 * T.triangle_count();
  for (int e = 0; e < T.edge_count(); ++e) {
    TrainTrack::Switch sw;
    for (int k = 0; k < 2; ++k) {
      const auto [t, s] = T.edge_sides[static_cast<std::size_t>(e)][static_cast<std::size_t>(k)];
      sw.sides[static_cast<std::size_t>(k)].left_branch = branch_id(t, (s + 1) % 3);
      sw.sides[static_cast<std::size_t>(k)].right_branch = branch_id(t, s);
    }
    tt.switches.push_back(sw);
  }
  return tt;
}

bool satisfies_switch_conditions(const TrainTrack& tt, const WeightVector& w) {
  check_size(tt, w, "satisfies_switch_conditions");
  for (const auto& sw : tt.switches) {
    const long long s0 = w[static_cast<std::size_t>(sw.sides[0].left_branch)] +
                         w[static_cast<std::size_t>(sw.sides[0].right_branch)];
    const long long s1 = w[static_cast<std::size_t>(sw.sides[1].left_branch)] +
                         w[static_cast<std::size_t>(sw.sides[1].right_branch)];
    if (s0 != s1) return false;
  }
  return true;
}

std::vector<long long> edge_coordinates(const TrainTrack& tt, const WeightVector& w) {
  check_size(tt, w, "edge_coordinates");
  std::vector<long long> out;
  for (const auto& sw : tt.switches)
    out.push_back(w[static_cast<std::size_t>(sw.sides[0].left_branch)] +
                  w[static_cast<std::size_t>(sw.sides[0].right_branch)]);
  return out;
}

std::vector<WeightVector> weight_basis(const TrainTrack& tt) {
  const std::size_t cols = static_cast<std::size_t>(tt.branch_count);
  IntMat M;
  for (const auto& sw : tt.switches) {
    std::vector<BigInt> row(cols, 0);
    row[static_cast<std::size_t>(sw.sides[0].left_branch)] += 1;
    row[static_cast<std::size_t>(sw.sides[0].right_branch)] += 1;
    row[static_cast<std::size_t>(sw.sides[1].left_branch)] -= 1;
    row[static_cast<std::size_t>(sw.sides[1].right_branch)] -= 1;
    M.push_back(std::move(row));
  }
  const auto kernel = integer_kernel(M, cols);
  const int expected = 6 * tt.genus + 3 * tt.punctures - 6;
  if (static_cast<int>(kernel.size()) != expected)
    throw RankMismatch("weight_basis: kernel rank " +
                       std::to_string(kernel.size()) + ", expected " +
                       std::to_string(expected));
  std::vector<WeightVector> basis;
  for (const auto& v : kernel) {
    WeightVector w;
    for (const auto& x : v) w.push_back(static_cast<long long>(x));
    basis.push_back(std::move(w));
  }
  return basis;
}

long long thurston_form(const TrainTrack& tt, const WeightVector& a,
                        const WeightVector& b) {
  check_size(tt, a, "thurston_form");
  check_size(tt, b, "thurston_form");
  long long total = 0;
  for (const auto& sw : tt.switches) {
    for (const auto& side : sw.sides) {
      const long long al = a[static_cast<std::size_t>(side.left_branch)];
      const long long ar = a[static_cast<std::size_t>(side.right_branch)];
      const long long bl = b[static_cast<std::size_t>(side.left_branch)];
      const long long br = b[static_cast<std::size_t>(side.right_branch)];
      total += al * br - ar * bl;
    }
  }
  return total;
}

WeightVector edge_vector(const TrainTrack& tt, int e) {
  if (e < 0 || e >= tt.switch_count())
    throw std::out_of_range("edge_vector: edge index out of range");
  const std::size_t cols = static_cast<std::size_t>(tt.branch_count);
  IntMat M;
  std::vector<BigInt> rhs;
  for (const auto& sw : tt.switches) {
    std::vector<BigInt> row(cols, 0);
    row[static_cast<std::size_t>(sw.sides[0].left_branch)] += 1;
    row[static_cast<std::size_t>(sw.sides[0].right_branch)] += 1;
    row[static_cast<std::size_t>(sw.sides[1].left_branch)] -= 1;
    row[static_cast<std::size_t>(sw.sides[1].right_branch)] -= 1;
    M.push_back(std::move(row));
    rhs.push_back(0);
  }
  for (int f = 0; f < tt.switch_count(); ++f) {
    const auto& sw = tt.switches[static_cast<std::size_t>(f)];
    std::vector<BigInt> row(cols, 0);
    row[static_cast<std::size_t>(sw.sides[0].left_branch)] += 1;
    row[static_cast<std::size_t>(sw.sides[0].right_branch)] += 1;
    M.push_back(std::move(row));
    rhs.push_back(f == e ? 2 : 0);
  }
  const auto x = solve_integer(M, rhs);
  if (x.empty())
    throw InvariantViolation("edge_vector: no integer solution for edge " +
                             std::to_string(e));
  WeightVector w;
  for (const auto& v : x) w.push_back(static_cast<long long>(v));
  return w;
}

int corner_count(const Triangulation& T, int i, int j) {
  int count = 0;
  for (const auto& tri : T.triangles) {
    for (int c = 0; c < 3; ++c) {
      // corner c sits between incoming side (c+2)%3 and outgoing side c
      const int in_edge = tri[static_cast<std::size_t>((c + 2) % 3)];
      const int out_edge = tri[static_cast<std::size_t>(c)];
      if (in_edge == i && out_edge == j) ++count;
    }
  }
  return count;
}

WeightVector puncture_vector(const Triangulation& T, int i) {
  if (i < 0 || i >= T.punctures)
    throw std::out_of_range("puncture_vector: puncture index out of range");
  WeightVector w(static_cast<std::size_t>(3 * T.triangle_count()), 0);
  for (int t = 0; t < T.triangle_count(); ++t)
    for (int c = 0; c < 3; ++c)
      if (T.corner_vertex[static_cast<std::size_t>(3 * t + c)] == i)
        w[static_cast<std::size_t>(branch_id(t, c))] = 1;
  return w;
}

}  // namespace skeinlab
