#pragma once

#include <cstdint>

#include "report.hpp"

namespace skeinlab::cli {

struct ShadowRunOptions {
  long N = 3;
  long k = 1;
  int samples = 20;
  std::uint64_t seed = 7;
  double curve_tol = 1e-6;
  double puncture_tol = 1e-6;
  double schur_tol = 1e-8;
};

/// Runs the shadow pipeline over a seeded corpus of random generic shear
/// data and assembles the full report. Samples are drawn per-index from the
/// seed, so the result is independent of the number of worker threads
/// (capped by SKEINLAB_THREADS).
Json shadow_run_report(const ShadowRunOptions& opt, const RunManifest& manifest);

}  // namespace skeinlab::cli
