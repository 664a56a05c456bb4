#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "quenchlab/objectives.hpp"
#include "quenchlab/rng.hpp"

namespace quenchlab {

enum class Schedule { Cauchy, ModifiedCauchy, Exponential };

char schedule_code(Schedule s);                 // 'C', 'M', 'E'
Schedule schedule_from_code(std::string_view);  // throws std::invalid_argument

struct SqParams {
  Schedule cs = Schedule::Cauchy;
  int nc = 1;          // cooling steps (outer loop)
  int ni = 1;          // iterations per temperature (middle loop)
  int ps = 1;          // population size (independent states, inner loop)
  double it = 10.0;    // initial temperature
  double t_final = 1e-6;  // Modified Cauchy target after nc steps
  double alpha = 0.9;     // Exponential decay factor
  double mutation_fraction = 0.1;  // half-width as a fraction of interval width

  void validate() const;  // throws std::invalid_argument
};

struct ScheduleState {
  int k = 0;  // cooling applications so far
  double temperature = 0.0;
};

// Modified Cauchy rate: beta = (T0 - Tn) / (nc * T0 * Tn). After nc
// applications the temperature lands on t_final exactly (up to rounding).
double modified_cauchy_beta(const SqParams& p);

// One cooling application. Cauchy: T = 1/(1+k), independent of the previous
// temperature (IT only governs the pre-cooling phase). Modified Cauchy: the
// recurrence T <- T/(1 + beta T) in its telescoped form T_k = 1/(1/T0 + k beta),
// which is exact at the endpoint. Exponential: T <- alpha T.
ScheduleState schedule_next(const SqParams& p, const ScheduleState& st);

// Per-coordinate mutation half-widths: fraction * (upper - lower).
std::vector<double> mutation_half_widths(const SearchDomain& d, double fraction);

// Offspring in the hyperbox around x: clamp(x_i + U[-b_i, b_i), bounds).
std::vector<double> mutate(std::span<const double> x, const SearchDomain& d,
                           std::span<const double> half_width, SplitMix64& rng);

// Metropolis rule given the uniform draw u: improving or equal moves always
// pass; a worsening move passes iff u < exp(-delta_f / temperature).
// Non-positive temperatures reject all worsening moves (frozen system).
bool metropolis_accept(double delta_f, double temperature, double u);

// Same rule drawing from rng. Improving moves consume no draw.
bool accept(double delta_f, double temperature, SplitMix64& rng);

struct RunResult {
  double best_fitness = 0.0;
  std::vector<double> best_point;
  long long evaluations = 0;  // ps + nc*ni*ps exactly
  long long accepted_proposals = 0;  // moves that replaced a state
  std::vector<double> trace;  // best-so-far after each cooling step (optional)
};

// One full quenching run from the given seed. Loop order: nc cooling steps,
// each holding ni sweeps over the ps states; cooling is applied after the
// sweeps of the step. Every state evolves independently; the returned best is
// global over all evaluations.
//
// Draw order (frozen for reproducibility): initialization takes dimension
// uniforms per state, in state-major order; each proposal takes dimension
// uniforms for the mutation and then exactly one more iff the move worsens.
RunResult run(const ObjectiveSpec& objective, const SqParams& params,
              std::uint64_t seed, bool record_trace = false);

}  // namespace quenchlab
