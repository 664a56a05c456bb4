#include "quenchlab/sq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quenchlab {

char schedule_code(Schedule s) {
  switch (s) {
    case Schedule::Cauchy: return 'C';
    case Schedule::ModifiedCauchy: return 'M';
    case Schedule::Exponential: return 'E';
  }
  throw std::invalid_argument("schedule_code: bad enum value");
}

Schedule schedule_from_code(std::string_view code) {
  if (code == "C") return Schedule::Cauchy;
  if (code == "M") return Schedule::ModifiedCauchy;
  if (code == "E") return Schedule::Exponential;
  throw std::invalid_argument("unknown cooling schedule '" + std::string(code) +
                              "' (expected C, M, or E)");
}

void SqParams::validate() const {
  if (nc < 1 || ni < 1 || ps < 1)
    throw std::invalid_argument("sq params: nc, ni, ps must be >= 1");
  if (!(it > 0.0)) throw std::invalid_argument("sq params: it must be positive");
  if (!(t_final > 0.0))
    throw std::invalid_argument("sq params: t_final must be positive");
  if (!(it > t_final))
    throw std::invalid_argument("sq params: it must exceed t_final");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("sq params: alpha must lie in (0, 1)");
  if (!(mutation_fraction > 0.0 && mutation_fraction <= 1.0))
    throw std::invalid_argument("sq params: mutation_fraction must lie in (0, 1]");
}

double modified_cauchy_beta(const SqParams& p) {
  return (p.it - p.t_final) / (static_cast<double>(p.nc) * p.it * p.t_final);
}

ScheduleState schedule_next(const SqParams& p, const ScheduleState& st) {
  const int k = st.k + 1;
  double t = 0.0;
  switch (p.cs) {
    case Schedule::Cauchy:
      t = 1.0 / (1.0 + static_cast<double>(k));
      break;
    case Schedule::ModifiedCauchy:
      t = 1.0 / (1.0 / p.it + static_cast<double>(k) * modified_cauchy_beta(p));
      break;
    case Schedule::Exponential:
      t = p.alpha * st.temperature;
      break;
  }
  return {k, t};
}

std::vector<double> mutation_half_widths(const SearchDomain& d, double fraction) {
  d.validate();
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("mutation fraction must lie in (0, 1]");
  std::vector<double> b(d.lower.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    b[i] = fraction * (d.upper[i] - d.lower[i]);
  return b;
}

namespace {

void mutate_into(std::vector<double>& out, std::span<const double> x,
                 const SearchDomain& d, std::span<const double> b,
                 SplitMix64& rng) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double step = rng.uniform(-b[i], b[i]);
    out[i] = std::clamp(x[i] + step, d.lower[i], d.upper[i]);
  }
}

}  // namespace

std::vector<double> mutate(std::span<const double> x, const SearchDomain& d,
                           std::span<const double> half_width, SplitMix64& rng) {
  if (static_cast<int>(x.size()) != d.dimension() ||
      half_width.size() != x.size())
    throw std::invalid_argument("mutate: dimension mismatch");
  std::vector<double> out(x.size());
  mutate_into(out, x, d, half_width, rng);
  return out;
}

bool metropolis_accept(double delta_f, double temperature, double u) {
  if (delta_f <= 0.0) return true;
  if (!(temperature > 0.0)) return false;
  return u < std::exp(-delta_f / temperature);
}

bool accept(double delta_f, double temperature, SplitMix64& rng) {
  if (delta_f <= 0.0) return true;
  return metropolis_accept(delta_f, temperature, rng.uniform01());
}

RunResult run(const ObjectiveSpec& objective, const SqParams& params,
              std::uint64_t seed, bool record_trace) {
  params.validate();
  objective.domain.validate();
  if (!objective.evaluator)
    throw std::invalid_argument("run: objective has no evaluator");

  const SearchDomain& dom = objective.domain;
  const int n = dom.dimension();
  const std::vector<double> b =
      mutation_half_widths(dom, params.mutation_fraction);

  SplitMix64 rng(seed);
  RunResult res;

  // independent initial states, uniform over the box
  std::vector<std::vector<double>> states(params.ps, std::vector<double>(n));
  std::vector<double> state_fitness(params.ps);
  for (int s = 0; s < params.ps; ++s) {
    for (int i = 0; i < n; ++i)
      states[s][i] = rng.uniform(dom.lower[i], dom.upper[i]);
    state_fitness[s] = objective.evaluator(states[s]) - objective.optimum_value;
  }
  res.evaluations = params.ps;
  int best_state = 0;
  for (int s = 1; s < params.ps; ++s)
    if (state_fitness[s] < state_fitness[best_state]) best_state = s;
  res.best_fitness = state_fitness[best_state];
  res.best_point = states[best_state];

  if (record_trace) res.trace.reserve(params.nc);
  ScheduleState sched{0, params.it};
  std::vector<double> cand(n);
  for (int c = 0; c < params.nc; ++c) {
    for (int i = 0; i < params.ni; ++i) {
      for (int s = 0; s < params.ps; ++s) {
        mutate_into(cand, states[s], dom, b, rng);
        const double f = objective.evaluator(cand) - objective.optimum_value;
        ++res.evaluations;
        if (f < res.best_fitness) {
          res.best_fitness = f;
          res.best_point = cand;
        }
        if (accept(f - state_fitness[s], sched.temperature, rng)) {
          states[s].swap(cand);
          state_fitness[s] = f;
          ++res.accepted_proposals;
        }
      }
    }
    sched = schedule_next(params, sched);
    if (record_trace) res.trace.push_back(res.best_fitness);
  }
  return res;
}

}  // namespace quenchlab
