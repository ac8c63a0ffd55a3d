// Acceptance gate: one line per criterion, exit code = number of failures.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "skeinlab/bracket.hpp"
#include "skeinlab/charvar.hpp"
#include "skeinlab/holonomy.hpp"
#include "skeinlab/qrep.hpp"
#include "skeinlab/qtrace.hpp"
#include "skeinlab/shadow.hpp"
#include "skeinlab/skein_pt.hpp"
#include "skeinlab/traintrack.hpp"
#include "skeinlab/triangulation.hpp"

using namespace skeinlab;
using skeinlab::test::data_path;
using skeinlab::test::random_braid;
using skeinlab::test::random_sl2;
using skeinlab::test::slurp;
namespace fs = std::filesystem;

namespace {

const char* kCorpus[] = {
    "punctured_torus.json",
    "three_punctured_sphere.json",
    "four_punctured_sphere.json",
    "two_punctured_torus.json",
};

struct SurfaceExpect {
  const char* file;
  int genus, punctures;
};

const SurfaceExpect kSurfaces[] = {
    {"punctured_torus.json", 1, 1},
    {"three_punctured_sphere.json", 0, 3},
    {"four_punctured_sphere.json", 0, 4},
    {"two_punctured_torus.json", 1, 2},
};

int rank_mod_n(const OmegaMatrix& omega, long N) {
  const std::size_t n = omega.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = ((omega[i][j] % N) + N) % N;
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    long long inv = 1;
    for (long long x = 1; x < N; ++x)
      if (m[row][col] * x % N == 1) {
        inv = x;
        break;
      }
    for (std::size_t j = 0; j < n; ++j) m[row][j] = m[row][j] * inv % N;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const long long f = m[i][col];
      for (std::size_t j = 0; j < n; ++j)
        m[i][j] = ((m[i][j] - f * m[row][j]) % N + N) % N;
    }
    ++row;
    ++rank;
  }
  return rank;
}

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

ShearData random_shear(Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::array<std::complex<double>, 3> roots = {
        rng.nonzero_complex(), rng.nonzero_complex(), rng.nonzero_complex()};
    const std::complex<double> prod = roots[0] * roots[1] * roots[2];
    const std::complex<double> tr = -(prod * prod + 1.0 / (prod * prod));
    if (std::abs(tr - 2.0) < 1e-3 || std::abs(tr + 2.0) < 1e-3) continue;
    return ShearData::from_roots(roots);
  }
  throw ValidationError("acceptance: could not draw generic shear data");
}

// ------------------------------------------------------------------ criteria

bool criterion_cheb_trace_law() {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat2 M = random_sl2(rng);
    Mat2 P = M;
    for (int n = 1; n <= 12; ++n) {
      const Complex lhs = chebyshev(n).eval(M.trace());
      const Complex rhs = P.trace();
      if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs))) return false;
      P = P * M;
    }
  }
  return true;
}

bool criterion_kauffman_axioms() {
  Rng rng(11);
  const LaurentHalf A = LaurentHalf::A(1);
  const LaurentHalf Ainv = LaurentHalf::A(-1);

  // exact skein relation at every crossing of a 50-diagram corpus
  int diagrams = 0;
  while (diagrams < 50) {
    const int strands = 2 + static_cast<int>(rng.next_below(3));
    const int len = 1 + static_cast<int>(rng.next_below(10));
    const LinkDiagram d = braid_closure(random_braid(rng, strands, len), strands);
    if (d.crossing_count() == 0) continue;
    ++diagrams;
    const LaurentHalf whole = kauffman_bracket(d);
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      const LaurentHalf zero =
          kauffman_bracket(d.resolve_crossing(c, Smoothing::Zero));
      const LaurentHalf inf =
          kauffman_bracket(d.resolve_crossing(c, Smoothing::Infinity));
      if (whole != Ainv * zero + A * inf) return false;
    }
  }

  // exact Reidemeister II and III invariance on braid moves
  for (int trial = 0; trial < 25; ++trial) {
    const int strands = 2 + static_cast<int>(rng.next_below(3));
    std::vector<int> word = random_braid(rng, strands, 4);
    std::vector<int> moved = word;
    const int gen = 1 + static_cast<int>(rng.next_below(
                            static_cast<std::uint64_t>(strands - 1)));
    const auto at = static_cast<std::ptrdiff_t>(rng.next_below(word.size() + 1));
    moved.insert(moved.begin() + at, {gen, -gen});
    if (kauffman_bracket(braid_closure(word, strands)) !=
        kauffman_bracket(braid_closure(moved, strands)))
      return false;
  }
  for (int trial = 0; trial < 15; ++trial) {
    const int strands = 3 + static_cast<int>(rng.next_below(2));
    std::vector<int> prefix = random_braid(rng, strands, 3);
    const int i = 1 + static_cast<int>(rng.next_below(
                          static_cast<std::uint64_t>(strands - 2)));
    std::vector<int> lhs = prefix, rhs = prefix;
    lhs.insert(lhs.end(), {i, i + 1, i});
    rhs.insert(rhs.end(), {i + 1, i, i + 1});
    if (kauffman_bracket(braid_closure(lhs, strands)) !=
        kauffman_bracket(braid_closure(rhs, strands)))
      return false;
  }

  // exact disjoint-union multiplicativity
  for (int trial = 0; trial < 10; ++trial) {
    const LinkDiagram a = braid_closure(random_braid(rng, 2, 3), 2);
    const LinkDiagram b = braid_closure(random_braid(rng, 3, 4), 3);
    if (kauffman_bracket(disjoint_union(a, b)) !=
        kauffman_bracket(a) * kauffman_bracket(b))
      return false;
  }
  return true;
}

bool criterion_bullock_identity() {
  Rng rng(22);
  const GroupWord a = GroupWord::parse("a");
  const GroupWord b = GroupWord::parse("b");
  const GroupWord ab = GroupWord::parse("ab");
  const GroupWord abinv = GroupWord::parse("aB");
  for (int trial = 0; trial < 1000; ++trial) {
    SL2Rep r;
    r.matrices = {random_sl2(rng), random_sl2(rng)};
    const Complex lhs = (-trace_word(a, r)) * (-trace_word(b, r));
    const Complex rhs = -(-trace_word(ab, r)) - (-trace_word(abinv, r));
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(lhs))) return false;
  }
  return true;
}

bool criterion_rewriting_system() {
  const auto X = [](int i) { return SkeinPTElement::generator(i); };
  const LaurentHalf A = LaurentHalf::A(1);
  const LaurentHalf Ainv = LaurentHalf::A(-1);
  const LaurentHalf Q = LaurentHalf::A(2) - LaurentHalf::A(-2);
  const int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& [i, j, k] : cyc) {
    if (multiply(X(i), X(j)) * A - multiply(X(j), X(i)) * Ainv != X(k) * Q)
      return false;
  }
  // exact associativity on every ordered monomial triple of total degree <= 6
  std::vector<SkeinPTElement::Monomial> monos;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b)
      for (int c = 0; a + b + c <= 6; ++c) monos.push_back({a, b, c});
  for (const auto& m1 : monos)
    for (const auto& m2 : monos) {
      const int d12 = m1[0] + m1[1] + m1[2] + m2[0] + m2[1] + m2[2];
      if (d12 > 6) continue;
      for (const auto& m3 : monos) {
        if (d12 + m3[0] + m3[1] + m3[2] > 6) continue;
        const SkeinPTElement u = SkeinPTElement::monomial(m1);
        const SkeinPTElement v = SkeinPTElement::monomial(m2);
        const SkeinPTElement w = SkeinPTElement::monomial(m3);
        if (multiply(multiply(u, v), w) != multiply(u, multiply(v, w)))
          return false;
      }
    }
  return true;
}

bool criterion_chebyshev_centrality() {
  for (long N : {3L, 5L, 7L}) {
    const RootOfUnity z(N, 1);
    for (int j = 1; j <= 3; ++j) {
      const SkeinPTElement tn =
          substitute(chebyshev(static_cast<int>(N)), SkeinPTElement::generator(j));
      for (int k = 1; k <= 3; ++k)
        if (commutator_at_root(tn, SkeinPTElement::generator(k), z) != 0.0)
          return false;
    }
  }
  return true;
}

bool criterion_kernel_rank() {
  for (const auto& s : kSurfaces) {
    const Triangulation T = load_triangulation(slurp(data_path(s.file)));
    const TrainTrack tt = build_train_track(T);
    if (static_cast<int>(weight_basis(tt).size()) !=
        6 * s.genus + 3 * s.punctures - 6)
      return false;
  }
  return true;
}

bool criterion_thurston_form() {
  Rng rng(31);
  for (const char* file : kCorpus) {
    const Triangulation T = load_triangulation(slurp(data_path(file)));
    const TrainTrack tt = build_train_track(T);
    for (int i = 0; i < tt.switch_count(); ++i) {
      const WeightVector wi = edge_vector(tt, i);
      for (int j = 0; j < tt.switch_count(); ++j) {
        const WeightVector wj = edge_vector(tt, j);
        if (!even_parity(tt, wi) || !even_parity(tt, wj)) return false;
        if (thurston_form(tt, wi, wj) !=
            -4LL * (corner_count(T, i, j) - corner_count(T, j, i)))
          return false;
      }
    }
    // exact antisymmetry and bilinearity on random lattice vectors
    const auto basis = weight_basis(tt);
    for (int trial = 0; trial < 10; ++trial) {
      WeightVector a(static_cast<std::size_t>(tt.branch_count), 0);
      WeightVector b = a, c = a;
      for (const auto& bv : basis) {
        const long long ca = static_cast<long long>(rng.next_below(7)) - 3;
        const long long cb = static_cast<long long>(rng.next_below(7)) - 3;
        const long long cc = static_cast<long long>(rng.next_below(7)) - 3;
        for (std::size_t x = 0; x < a.size(); ++x) {
          a[x] += ca * bv[x];
          b[x] += cb * bv[x];
          c[x] += cc * bv[x];
        }
      }
      WeightVector bc = b;
      for (std::size_t x = 0; x < bc.size(); ++x) bc[x] += c[x];
      if (thurston_form(tt, a, b) != -thurston_form(tt, b, a)) return false;
      if (thurston_form(tt, a, bc) !=
          thurston_form(tt, a, b) + thurston_form(tt, a, c))
        return false;
    }
  }
  return true;
}

bool criterion_build_rep() {
  Rng rng(42);
  const Triangulation T =
      load_triangulation(slurp(data_path("punctured_torus.json")));
  const TrainTrack tt = build_train_track(T);
  const auto basis = weight_basis(tt);
  const OmegaMatrix omega = omega_matrix(tt, basis);
  for (long N : {3L, 5L, 7L}) {
    const int r = rank_mod_n(omega, N);
    if (r % 2 != 0) return false;
    long expect = 1;
    for (int i = 0; i < r / 2; ++i) expect *= N;
    std::vector<std::complex<double>> scalars;
    for (std::size_t i = 0; i < basis.size(); ++i)
      scalars.push_back(rng.nonzero_complex());
    const MatrixRep rep = build_rep(omega, RootOfUnity(N, 1), scalars);
    if (rep.dimension != expect) return false;
    if (verify_rep(rep) >= 1e-10) return false;
    if (irreducibility_rank(rep) != rep.dimension * rep.dimension) return false;
  }
  return true;
}

bool criterion_desk_scale() {
  // a failed constraint search surfaces here as SearchExhausted and fails
  // the criterion through the catch-all in main
  Rng rng(7);
  for (long N : {3L, 5L}) {
    const RootOfUnity z(N, 1);
    for (int sample = 0; sample < 20; ++sample) {
      const ShearData sd = random_shear(rng);
      const ShadowReport rep = shadow_pipeline(sd, z);
      for (const auto& c : rep.curves) {
        if (c.schur_residual >= 1e-8) return false;
        if (c.error >= 1e-6) return false;
      }
      if (rep.puncture.schur_residual >= 1e-8) return false;
      if (rep.puncture.error >= 1e-6) return false;
    }
  }
  return true;
}

bool criterion_central_report() {
  const CentralElementReport rep = closed_torus_central_check();
  // definitive symbolic verdicts for the displayed element and its variant
  if (!rep.verbatim.central) return false;
  if (rep.symmetric.central) return false;

  // the committed artifact must exist and agree with the fresh run
  const std::string path =
      std::string(SKEINLAB_REPO_DIR) + "/reports/central_elements.json";
  if (!fs::exists(path)) return false;
  const auto j = nlohmann::json::parse(slurp(path));
  if (j.at("verbatim").at("central").get<bool>() != rep.verbatim.central)
    return false;
  if (j.at("symmetric").at("central").get<bool>() != rep.symmetric.central)
    return false;
  if (j.at("survey").size() != rep.survey.size()) return false;
  for (std::size_t i = 0; i < rep.survey.size(); ++i)
    if (j.at("survey")[i].at("central").get<bool>() != rep.survey[i].central)
      return false;
  return true;
}

bool criterion_determinism() {
  const fs::path r1 = fs::temp_directory_path() / "skeinlab_accept_run1.json";
  const fs::path r2 = fs::temp_directory_path() / "skeinlab_accept_run2.json";
  const std::string base = std::string(SKEINLAB_CLI_PATH) +
                           " shadow run --N 3 --samples 20 --seed 7 --report ";
  if (std::system((base + r1.string() + " >/dev/null 2>&1").c_str()) != 0)
    return false;
  if (std::system((base + r2.string() + " >/dev/null 2>&1").c_str()) != 0)
    return false;
  const std::string a = slurp(r1.string());
  const std::string b = slurp(r2.string());
  fs::remove(r1);
  fs::remove(r2);
  return !a.empty() && a == b;
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    std::function<bool()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Chebyshev trace law on 100 random determinant-1 matrices, n <= 12",
       criterion_cheb_trace_law},
      {"Kauffman bracket axioms: skein relation, R2/R3, disjoint union",
       criterion_kauffman_axioms},
      {"one-crossing trace identity over 1000 random SL2 pairs",
       criterion_bullock_identity},
      {"rewriting system: presented relations and associativity to degree 6",
       criterion_rewriting_system},
      {"T_N(X_j) central mod Phi_N for N in {3,5,7}",
       criterion_chebyshev_centrality},
      {"weight lattice rank 6g+3p-6 on the four-surface corpus",
       criterion_kernel_rank},
      {"Thurston form: corner-count oracle, antisymmetry, bilinearity",
       criterion_thurston_form},
      {"representation dimension, commutation residual, irreducibility",
       criterion_build_rep},
      {"desk-scale pipeline at N in {3,5}, 20 seeded samples",
       criterion_desk_scale},
      {"central element survey with committed report artifact",
       criterion_central_report},
      {"byte-identical reports from repeated seeded runs",
       criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string note;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL")
              << " - " << criteria[i].description << note << "\n";
  }
  return failures;
}
