#include "skeinlab/qtrace.hpp"

#include "skeinlab/holonomy.hpp"
#include "skeinlab/traintrack.hpp"

namespace skeinlab {

namespace {

const char* kPuncturedTorusJson = R"({
  "genus": 1,
  "punctures": 1,
  "triangles": [[0, 1, 2], [2, 0, 1]],
  "gluings": [[0, 0, 1, 1], [0, 1, 1, 2], [0, 2, 1, 0]]
})";

}  // namespace

const Triangulation& standard_punctured_torus() {
  static const Triangulation T = load_triangulation(kPuncturedTorusJson);
  return T;
}

WeightVector lattice_from_edge_coords(const TrainTrack& tt,
                                      const std::vector<long long>& coords) {
  if (static_cast<int>(coords.size()) != tt.switch_count())
    throw TrackMismatch("lattice_from_edge_coords: coordinate count mismatch");
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
  for (int e = 0; e < tt.switch_count(); ++e) {
    const auto& sw = tt.switches[static_cast<std::size_t>(e)];
    std::vector<BigInt> row(cols, 0);
    row[static_cast<std::size_t>(sw.sides[0].left_branch)] += 1;
    row[static_cast<std::size_t>(sw.sides[0].right_branch)] += 1;
    M.push_back(std::move(row));
    rhs.push_back(coords[static_cast<std::size_t>(e)]);
  }
  const auto x = solve_integer(M, rhs);
  if (x.empty())
    throw TrackMismatch("lattice_from_edge_coords: no lattice point with the "
                        "requested edge coordinates");
  WeightVector w;
  for (const auto& v : x) w.push_back(static_cast<long long>(v));
  return w;
}

namespace {

// candidate support of Y for one curve: the lattice preimages of the
// classical trace polynomial's monomials
std::vector<WeightVector> support_for_curve(const TrainTrack& tt, long p, long q) {
  const MLaurent poly = classical_trace_poly(p, q);
  std::vector<WeightVector> support;
  for (const auto& [e, c] : poly.terms()) {
    if (c != 1)
      throw SearchExhausted(
          "quantum_trace_pt: classical polynomial has a non-unit coefficient");
    std::vector<long long> coords(e.begin(), e.end());
    support.push_back(lattice_from_edge_coords(tt, coords));
  }
  return support;
}

QTorusElement assemble(const std::vector<WeightVector>& support,
                       const std::vector<int>& half_powers) {
  QTorusElement y;
  for (std::size_t m = 0; m < support.size(); ++m)
    y += QTorusElement::monomial(support[m],
                                 LaurentHalf::monomial_half(half_powers[m]));
  return y;
}

bool relations_hold(const TrainTrack& tt, const std::array<QTorusElement, 3>& Y) {
  const LaurentHalf A = LaurentHalf::A(1);
  const LaurentHalf Ainv = LaurentHalf::A(-1);
  const LaurentHalf rhs_coeff = LaurentHalf::A(2) - LaurentHalf::A(-2);
  for (int i = 0; i < 3; ++i) {
    const QTorusElement& Yi = Y[static_cast<std::size_t>(i)];
    const QTorusElement& Yj = Y[static_cast<std::size_t>((i + 1) % 3)];
    const QTorusElement& Yk = Y[static_cast<std::size_t>((i + 2) % 3)];
    const QTorusElement lhs =
        qt_multiply(tt, Yi, Yj) * A - qt_multiply(tt, Yj, Yi) * Ainv;
    if (lhs != Yk * rhs_coeff) return false;
  }
  return true;
}

QuantumTrace run_search() {
  const Triangulation& T = standard_punctured_torus();
  QuantumTrace qt;
  qt.track = build_train_track(T);
  qt.basis = weight_basis(qt.track);

  const std::array<std::array<std::pair<long, long>, 3>, 2> curve_options = {{
      {{{1, 0}, {0, 1}, {1, 1}}},
      {{{1, 0}, {0, 1}, {1, -1}}},
  }};

  for (const auto& curves : curve_options) {
    std::array<std::vector<WeightVector>, 3> supports;
    std::array<std::size_t, 3> sizes{};
    bool ok = true;
    std::size_t total = 0;
    try {
      for (int i = 0; i < 3; ++i) {
        supports[static_cast<std::size_t>(i)] =
            support_for_curve(qt.track, curves[static_cast<std::size_t>(i)].first,
                              curves[static_cast<std::size_t>(i)].second);
        sizes[static_cast<std::size_t>(i)] =
            supports[static_cast<std::size_t>(i)].size();
        total += sizes[static_cast<std::size_t>(i)];
      }
    } catch (const ValidationError&) {
      ok = false;
    }
    if (!ok || total == 0 || total > 12) continue;

    // half-integer A-power per monomial, searched over {0}, then {-1,0,1}^n,
    // then {-2..2}^n
    for (int radius = 0; radius <= 2; ++radius) {
      const int span = 2 * radius + 1;
      std::size_t combos = 1;
      for (std::size_t m = 0; m < total; ++m) combos *= static_cast<std::size_t>(span);
      for (std::size_t code = 0; code < combos; ++code) {
        std::size_t rest = code;
        std::array<QTorusElement, 3> Y;
        std::size_t slot = 0;
        std::vector<int> powers(total);
        for (std::size_t m = 0; m < total; ++m) {
          powers[m] = static_cast<int>(rest % static_cast<std::size_t>(span)) - radius;
          rest /= static_cast<std::size_t>(span);
        }
        for (int i = 0; i < 3; ++i) {
          std::vector<int> ps(powers.begin() + static_cast<long>(slot),
                              powers.begin() + static_cast<long>(slot + sizes[static_cast<std::size_t>(i)]));
          slot += sizes[static_cast<std::size_t>(i)];
          Y[static_cast<std::size_t>(i)] =
              assemble(supports[static_cast<std::size_t>(i)], ps);
        }
        // skip assignments already covered by a smaller radius
        if (radius > 0) {
          bool boundary = false;
          for (int pw : powers)
            if (pw == radius || pw == -radius) boundary = true;
          if (!boundary) continue;
        }
        if (relations_hold(qt.track, Y)) {
          qt.Y = Y;
          qt.curves = curves;
          return qt;
        }
      }
    }
  }
  throw SearchExhausted(
      "quantum_trace_pt: no coefficient assignment within the search bound "
      "satisfies the presentation relations");
}

}  // namespace

const QuantumTrace& quantum_trace_pt() {
  static const QuantumTrace qt = run_search();
  return qt;
}

}  // namespace skeinlab
