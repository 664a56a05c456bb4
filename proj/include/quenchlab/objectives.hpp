#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quenchlab {

// Rectangular search box with per-coordinate bounds. The benchmark problems
// use the same interval on every coordinate; the likelihood problem does not.
struct SearchDomain {
  std::vector<double> lower;
  std::vector<double> upper;

  SearchDomain() = default;
  SearchDomain(int dimension, double lo, double hi)
      : lower(dimension, lo), upper(dimension, hi) {}
  SearchDomain(std::vector<double> lo, std::vector<double> hi)
      : lower(std::move(lo)), upper(std::move(hi)) {}

  int dimension() const { return static_cast<int>(lower.size()); }

  // throws std::domain_error if empty or any lower[i] >= upper[i]
  void validate() const;
};

// A minimization problem plus its known optimum, so runs can report fitness
// as distance-to-optimum: fitness(x) = evaluator(x) - optimum_value.
struct ObjectiveSpec {
  std::string name;
  SearchDomain domain;
  std::function<double(std::span<const double>)> evaluator;
  std::vector<double> optimum_point;
  double optimum_value = 0.0;
};

// f(x) = 1 + sum(x_i^2)/4000 - prod(cos(x_i / sqrt(i))), i counted from 1.
double eval_griewangk(std::span<const double> x);

// f(x) = 10 n + sum(x_i^2 - 10 cos(2 pi x_i))
double eval_rastrigin(std::span<const double> x);

// f(x) = 20 + e - 20 exp(-0.2 sqrt(sum(x_i^2)/n)) - exp(sum(cos(2 pi x_i))/n)
double eval_ackley(std::span<const double> x);

// Pairwise sum over consecutive coordinates (needs n >= 2):
//   sum_{i=1}^{n-1} (x_{i+1}+1) cos(sqrt|x_{i+1}-x_i+1|) sin(sqrt|x_{i+1}+x_i+1|)
//                 +  x_i       cos(sqrt|x_{i+1}+x_i+1|) sin(sqrt|x_{i+1}-x_i+1|)
double eval_rana(std::span<const double> x);

// evaluator(x) - optimum_value; throws std::domain_error on dimension mismatch
double fitness(const ObjectiveSpec& spec, std::span<const double> x);

ObjectiveSpec griewangk_spec(int n = 100);
ObjectiveSpec rastrigin_spec(int n = 100);
ObjectiveSpec ackley_spec(int n = 100);
ObjectiveSpec rana_spec(int n = 100);

// The four built-in benchmark problems at n = 100:
//   griewangk [-512, 512], rastrigin [-50, 50], ackley [-100, 100],
//   rana [-520, 520] (optimum point at -514.04 on every coordinate; its
//   stored optimum value is the direct evaluation of the function there).
std::vector<ObjectiveSpec> builtin_suite();

// Lookup by name ("griewangk", "rastrigin", "ackley", "rana") at n = 100.
std::optional<ObjectiveSpec> builtin_objective(std::string_view name);

}  // namespace quenchlab
