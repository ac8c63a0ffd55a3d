#include "shadow_run.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "skeinlab/rng.hpp"
#include "skeinlab/shadow.hpp"

namespace skeinlab::cli {

namespace {

std::uint64_t sample_seed(std::uint64_t seed, int index) {
  return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
}

/// Draw shear square roots until the pipeline accepts them as generic.
ShadowReport run_sample(const ShadowRunOptions& opt, int index,
                        std::array<std::complex<double>, 3>* roots_out) {
  Rng rng(sample_seed(opt.seed, index));
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::array<std::complex<double>, 3> roots = {
        rng.nonzero_complex(), rng.nonzero_complex(), rng.nonzero_complex()};
    try {
      ShadowReport r = shadow_pipeline(ShearData::from_roots(roots),
                                       RootOfUnity(opt.N, opt.k));
      *roots_out = roots;
      return r;
    } catch (const ValidationError&) {
      // non-generic draw; try the next one
    }
  }
  throw InvariantViolation("shadow corpus: could not draw a generic sample");
}

int thread_cap(int samples) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SKEINLAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::min(n, samples);
}

}  // namespace

Json shadow_run_report(const ShadowRunOptions& opt, const RunManifest& manifest) {
  struct Slot {
    ShadowReport report;
    std::array<std::complex<double>, 3> roots;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(opt.samples));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= opt.samples) return;
      try {
        auto& slot = slots[static_cast<std::size_t>(i)];
        slot.report = run_sample(opt, i, &slot.roots);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const int threads = thread_cap(opt.samples);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Json results = Json::array();
  double max_error = 0.0, max_schur = 0.0;
  bool pass = true;
  for (int i = 0; i < opt.samples; ++i) {
    const auto& [r, roots] = slots[static_cast<std::size_t>(i)];
    Json curves = Json::array();
    for (const auto& c : r.curves) {
      curves.push_back({{"index", c.index},
                        {"p", c.p},
                        {"q", c.q},
                        {"lambda", complex_json(c.lambda)},
                        {"target", complex_json(c.target)},
                        {"error", c.error},
                        {"schur_residual", c.schur_residual}});
      max_error = std::max(max_error, c.error);
      max_schur = std::max(max_schur, c.schur_residual);
      if (c.error >= opt.curve_tol || c.schur_residual >= opt.schur_tol)
        pass = false;
    }
    const auto& p = r.puncture;
    max_error = std::max(max_error, p.error);
    max_schur = std::max(max_schur, p.schur_residual);
    if (p.error >= opt.puncture_tol || p.schur_residual >= opt.schur_tol)
      pass = false;
    if (r.irrep_rank != r.dimension * r.dimension) pass = false;

    results.push_back(
        {{"sample", i},
         {"roots", Json::array({complex_json(roots[0]), complex_json(roots[1]),
                                complex_json(roots[2])})},
         {"dimension", r.dimension},
         {"irrep_rank", r.irrep_rank},
         {"curves", curves},
         {"puncture",
          {{"p", complex_json(p.p_scalar)},
           {"tn_p", complex_json(p.tn_p)},
           {"target", complex_json(p.target)},
           {"error", p.error},
           {"schur_residual", p.schur_residual},
           {"power_consistency", p.power_consistency}}},
         {"notes", r.notes}});
  }

  return Json{{"schema", "skeinlab/v1/shadow-report"},
              {"manifest", manifest.json()},
              {"N", opt.N},
              {"k", opt.k},
              {"samples", opt.samples},
              {"seed", opt.seed},
              {"tolerances",
               {{"curve", opt.curve_tol},
                {"puncture", opt.puncture_tol},
                {"schur", opt.schur_tol}}},
              {"results", results},
              {"max_error", max_error},
              {"max_schur_residual", max_schur},
              {"pass", pass}};
}

}  // namespace skeinlab::cli
