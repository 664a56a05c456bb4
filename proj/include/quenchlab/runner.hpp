#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quenchlab/design.hpp"
#include "quenchlab/diffusion.hpp"

namespace quenchlab {

struct RunRecord {
  std::string problem;
  Schedule cs = Schedule::Cauchy;
  int nc = 1;
  int ni = 1;
  int ps = 1;
  double it = 10.0;
  int rep = 0;
  std::uint64_t seed = 0;
  double fitness = 0.0;   // distance-to-optimum; raw likelihood for "likelihood"
  long long evals = 0;
  long long wall_ms = 0;  // observational only, excluded from determinism
};

struct ResultSet {
  std::vector<RunRecord> records;
  std::uint64_t design_fingerprint = 0;
};

// Order-independent identity of a result set: hash chain over every record's
// coordinates and outcome (wall_ms excluded). write/read round trips keep it.
std::uint64_t fingerprint_records(const std::vector<RunRecord>& records);

// The path the "likelihood" problem optimizes against when none is supplied:
// 101 unit-spaced observations, x1 = 1, m = 0, sigma2 = 1e-5, simulated from
// a seed derived from base_seed (same design => same path).
DiffusionPath default_likelihood_path(std::uint64_t base_seed);

// Every (config, rep) unit run in enumeration order, rep-minor. Problems:
// the four built-in benchmarks (fitness = distance to optimum, minimized) or
// "likelihood" (fitness column = raw likelihood at the best point, maximized;
// `path` overrides the default path). Unknown problem names throw
// std::invalid_argument.
//
// Results are bit-identical for any parallelism: each unit owns a generator
// seeded by derive_seed and writes only its own slot. parallelism <= 0 means
// one thread per hardware core.
ResultSet run_design(const Design& d, int parallelism,
                     const DiffusionPath* path = nullptr);

// Plain-loop reference implementation; run_design must match it bit for bit.
ResultSet run_design_serial(const Design& d, const DiffusionPath* path = nullptr);

}  // namespace quenchlab
