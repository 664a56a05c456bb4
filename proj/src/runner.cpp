#include "quenchlab/runner.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quenchlab/rng.hpp"

namespace quenchlab {

std::uint64_t fingerprint_records(const std::vector<RunRecord>& records) {
  std::uint64_t h = mix64(0x7131aa2345f90e1bULL ^ records.size());
  auto absorb = [&h](std::uint64_t v) { h = mix64(h ^ v); };
  for (const RunRecord& r : records) {
    absorb(r.problem.size());
    for (unsigned char c : r.problem) absorb(c);
    absorb(static_cast<std::uint64_t>(schedule_code(r.cs)));
    absorb(static_cast<std::uint64_t>(r.nc));
    absorb(static_cast<std::uint64_t>(r.ni));
    absorb(static_cast<std::uint64_t>(r.ps));
    absorb(std::bit_cast<std::uint64_t>(r.it));
    absorb(static_cast<std::uint64_t>(r.rep));
    absorb(r.seed);
    absorb(std::bit_cast<std::uint64_t>(r.fitness));
    absorb(static_cast<std::uint64_t>(r.evals));
  }
  return h;
}

DiffusionPath default_likelihood_path(std::uint64_t base_seed) {
  std::vector<double> times(101);
  std::iota(times.begin(), times.end(), 0.0);
  const std::uint64_t path_seed = mix64(base_seed ^ 0x1f123bb5159a55e5ULL);
  return simulate_path(0.0, 1e-5, times, 1.0, path_seed);
}

namespace {

struct ProblemSetup {
  ObjectiveSpec spec;
  bool raw_likelihood = false;
  DiffusionPath path;  // only meaningful when raw_likelihood
};

ProblemSetup make_problem_setup(const Design& d, const DiffusionPath* path) {
  if (d.problem == "likelihood") {
    ProblemSetup s;
    s.path = path ? *path : default_likelihood_path(d.base_seed);
    s.spec = likelihood_objective(s.path);
    s.raw_likelihood = true;
    return s;
  }
  auto obj = builtin_objective(d.problem);
  if (!obj) throw std::invalid_argument("unknown problem '" + d.problem + "'");
  return {std::move(*obj), false, {}};
}

RunRecord run_unit(const ProblemSetup& setup, const Design& d,
                   const SqConfig& cfg, std::uint64_t config_index, int rep) {
  SqParams p;
  p.cs = cfg.cs;
  p.nc = cfg.nc;
  p.ni = cfg.ni;
  p.ps = cfg.ps;
  p.it = cfg.it;

  RunRecord rec;
  rec.problem = d.problem;
  rec.cs = cfg.cs;
  rec.nc = cfg.nc;
  rec.ni = cfg.ni;
  rec.ps = cfg.ps;
  rec.it = cfg.it;
  rec.rep = rep;
  rec.seed = derive_seed(d.base_seed, d.problem, config_index,
                         static_cast<std::uint64_t>(rep));

  const auto t0 = std::chrono::steady_clock::now();
  const RunResult r = run(setup.spec, p, rec.seed);
  rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  rec.evals = r.evaluations;
  if (setup.raw_likelihood) {
    // report the raw (maximized) likelihood at the best point; coordinate 1
    // of the objective is ln(sigma2)
    rec.fitness =
        likelihood(setup.path, r.best_point[0], std::exp(r.best_point[1])).value;
  } else {
    rec.fitness = r.best_fitness;
  }
  return rec;
}

ResultSet run_all(const Design& d, const DiffusionPath* path, int parallelism) {
  d.validate();
  const ProblemSetup setup = make_problem_setup(d, path);
  const std::vector<SqConfig> configs = enumerate_design(d);
  const long long total =
      static_cast<long long>(configs.size()) * static_cast<long long>(d.reps);

  ResultSet rs;
  rs.records.resize(total);
  bool failed = false;

  if (parallelism == 1) {
    for (long long u = 0; u < total; ++u) {
      const long long ci = u / d.reps;
      rs.records[u] = run_unit(setup, d, configs[ci],
                               static_cast<std::uint64_t>(ci),
                               static_cast<int>(u % d.reps));
    }
  } else {
#ifdef _OPENMP
    const int threads = parallelism > 0 ? parallelism : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long u = 0; u < total; ++u) {
      try {
        const long long ci = u / d.reps;
        rs.records[u] = run_unit(setup, d, configs[ci],
                                 static_cast<std::uint64_t>(ci),
                                 static_cast<int>(u % d.reps));
      } catch (...) {
        // inputs were validated up front; anything here is a logic error
#pragma omp atomic write
        failed = true;
      }
    }
#else
    for (long long u = 0; u < total; ++u) {
      const long long ci = u / d.reps;
      rs.records[u] = run_unit(setup, d, configs[ci],
                               static_cast<std::uint64_t>(ci),
                               static_cast<int>(u % d.reps));
    }
#endif
  }
  if (failed) throw std::runtime_error("run_design: a unit failed unexpectedly");
  rs.design_fingerprint = fingerprint_records(rs.records);
  return rs;
}

}  // namespace

ResultSet run_design(const Design& d, int parallelism, const DiffusionPath* path) {
  return run_all(d, path, parallelism);
}

ResultSet run_design_serial(const Design& d, const DiffusionPath* path) {
  return run_all(d, path, 1);
}

}  // namespace quenchlab
