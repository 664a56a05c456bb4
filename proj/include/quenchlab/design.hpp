#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quenchlab/sq.hpp"

namespace quenchlab {

// A full-factorial experiment: the Cartesian product of the level lists,
// each combination repeated `reps` times with derived seeds.
struct Design {
  std::string problem;
  std::vector<Schedule> cs;
  std::vector<int> nc;
  std::vector<int> ni;
  std::vector<int> ps;
  std::vector<double> it;
  int reps = 30;
  std::uint64_t base_seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct SqConfig {
  Schedule cs = Schedule::Cauchy;
  int nc = 1;
  int ni = 1;
  int ps = 1;
  double it = 10.0;
};

// All combinations in fixed lexicographic order (cs, nc, ni, ps, it), each
// level list in declared order. A config's position is its config_index.
std::vector<SqConfig> enumerate_design(const Design& d);

// Stable per-run seed: avalanche mixing of (base_seed, problem name,
// config_index, rep). Any single-field change reshuffles roughly half the
// output bits.
std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view problem,
                          std::uint64_t config_index, std::uint64_t rep);

// The complete study grid: C/M/E x NC {1000,2000,4000,8000,16000} x
// NI {2,4,8,16,32} x PS {1,2,4,8,16} x IT {10,50,100}, 30 replicates.
// 1125 configs, 33750 runs. `problem` is left for the caller to fill.
Design full_design();

// Smoke-scale variant: all three schedules, two levels per numeric factor
// (NC {1000,2000}, NI {2,4}, PS {1,2}, IT {10,50}), 10 replicates. The low
// levels are deliberate: schedule effects on the rugged objectives are small
// and fade as the evaluation budget grows, so a desk-scale comparison keeps
// every cell cheap rather than spreading the budget factors wide.
Design reduced_design();

// Design from its JSON form:
//   {"cs":["C","M","E"],"nc":[...],"ni":[...],"ps":[...],"it":[...],
//    "reps":30,"base_seed":0}
// reps/base_seed are optional (defaults 30 and 0); unknown keys are rejected.
// Malformed JSON throws ParseError; semantically bad values throw
// std::invalid_argument.
Design parse_design_json(const std::string& text);
Design load_design_json(const std::string& file);  // ParseError if unreadable

}  // namespace quenchlab
