// Times the OpenMP batch runner against the plain-loop reference on the
// reduced design and checks that the two produce bit-identical fitness
// columns. Build and run by hand; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "quenchlab/design.hpp"
#include "quenchlab/runner.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const char* problem = argc > 1 ? argv[1] : "rastrigin";
  quenchlab::Design d = quenchlab::reduced_design();
  d.problem = problem;
  d.base_seed = 42;

  std::printf("problem=%s configs=%zu reps=%d\n", problem,
              quenchlab::enumerate_design(d).size(), d.reps);

  auto t0 = std::chrono::steady_clock::now();
  quenchlab::ResultSet serial = quenchlab::run_design_serial(d);
  double t_serial = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  quenchlab::ResultSet parallel = quenchlab::run_design(d, 0);
  double t_parallel = seconds_since(t0);

  if (serial.records.size() != parallel.records.size()) {
    std::fprintf(stderr, "record count mismatch\n");
    return 1;
  }
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    if (serial.records[i].fitness != parallel.records[i].fitness ||
        serial.records[i].seed != parallel.records[i].seed) {
      std::fprintf(stderr, "divergence at record %zu\n", i);
      return 1;
    }
  }

  std::printf("serial   %.3f s\n", t_serial);
  std::printf("parallel %.3f s  (speedup %.2fx)\n", t_parallel,
              t_serial / t_parallel);
  std::printf("fingerprints match: %016llx\n",
              static_cast<unsigned long long>(parallel.design_fingerprint));
  return 0;
}
