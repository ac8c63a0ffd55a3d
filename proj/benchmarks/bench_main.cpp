#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "skeinlab/bracket.hpp"
#include "skeinlab/qrep.hpp"
#include "skeinlab/qtrace.hpp"
#include "skeinlab/rng.hpp"
#include "skeinlab/skein_pt.hpp"
#include "skeinlab/triangulation.hpp"

namespace {

using namespace skeinlab;

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<int> seeded_braid(Rng& rng, int strands, int len) {
  std::vector<int> word;
  for (int j = 0; j < len; ++j) {
    const int gen = 1 + static_cast<int>(rng.next_below(
                            static_cast<std::uint64_t>(strands - 1)));
    word.push_back(rng.next_below(2) == 0 ? gen : -gen);
  }
  return word;
}

void bm_bracket_state_sum(benchmark::State& state) {
  Rng rng(11);
  const LinkDiagram d = braid_closure(
      seeded_braid(rng, 3, static_cast<int>(state.range(0))), 3);
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
}
BENCHMARK(bm_bracket_state_sum)->Arg(8)->Arg(12)->Arg(16);

void bm_skein_multiply(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const SkeinPTElement u =
      SkeinPTElement::monomial({0, deg, 0});
  const SkeinPTElement v = SkeinPTElement::monomial({deg, 0, deg});
  for (auto _ : state) benchmark::DoNotOptimize(multiply(u, v));
}
BENCHMARK(bm_skein_multiply)->Arg(2)->Arg(4)->Arg(6);

void bm_qt_multiply(benchmark::State& state) {
  const QuantumTrace& qt = quantum_trace_pt();
  QTorusElement u = qt.Y[0], v = qt.Y[1];
  for (int i = 1; i < state.range(0); ++i) {
    u = qt_multiply(qt.track, u, qt.Y[0]);
    v = qt_multiply(qt.track, v, qt.Y[1]);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(qt_multiply(qt.track, u, v));
}
BENCHMARK(bm_qt_multiply)->Arg(1)->Arg(2)->Arg(3);

void bm_build_rep(benchmark::State& state) {
  const std::string file = std::string(SKEINLAB_DATA_DIR) +
                           (state.range(1) == 0 ? "/punctured_torus.json"
                                                : "/two_punctured_torus.json");
  const Triangulation T = load_triangulation(slurp(file));
  const TrainTrack tt = build_train_track(T);
  const auto basis = weight_basis(tt);
  const OmegaMatrix omega = omega_matrix(tt, basis);
  Rng rng(42);
  std::vector<std::complex<double>> scalars;
  for (std::size_t i = 0; i < basis.size(); ++i)
    scalars.push_back(rng.nonzero_complex());
  const RootOfUnity z(state.range(0), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_rep(omega, z, scalars));
}
BENCHMARK(bm_build_rep)->Args({3, 0})->Args({5, 0})->Args({7, 0})->Args({5, 1});

}  // namespace

BENCHMARK_MAIN();
