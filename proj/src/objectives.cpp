#include "quenchlab/objectives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quenchlab {

void SearchDomain::validate() const {
  if (lower.empty() || lower.size() != upper.size())
    throw std::domain_error("search domain: need matching, non-empty bounds");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i]))
      throw std::domain_error("search domain: lower bound must be below upper");
}

double eval_griewangk(std::span<const double> x) {
  if (x.empty()) throw std::domain_error("griewangk: empty input");
  double sum = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return 1.0 + sum / 4000.0 - prod;
}

double eval_rastrigin(std::span<const double> x) {
  if (x.empty()) throw std::domain_error("rastrigin: empty input");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double sum = 0.0;
  for (double xi : x) sum += xi * xi - 10.0 * std::cos(two_pi * xi);
  return 10.0 * static_cast<double>(x.size()) + sum;
}

double eval_ackley(std::span<const double> x) {
  if (x.empty()) throw std::domain_error("ackley: empty input");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double xi : x) {
    sq += xi * xi;
    cs += std::cos(two_pi * xi);
  }
  return 20.0 + std::numbers::e - 20.0 * std::exp(-0.2 * std::sqrt(sq / n)) -
         std::exp(cs / n);
}

double eval_rana(std::span<const double> x) {
  if (x.size() < 2) throw std::domain_error("rana: needs at least 2 coordinates");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i];
    const double b = x[i + 1];
    const double u = std::sqrt(std::fabs(b - a + 1.0));
    const double v = std::sqrt(std::fabs(b + a + 1.0));
    sum += (b + 1.0) * std::cos(u) * std::sin(v) + a * std::cos(v) * std::sin(u);
  }
  return sum;
}

double fitness(const ObjectiveSpec& spec, std::span<const double> x) {
  if (static_cast<int>(x.size()) != spec.domain.dimension())
    throw std::domain_error("fitness: dimension mismatch for " + spec.name);
  return spec.evaluator(x) - spec.optimum_value;
}

ObjectiveSpec griewangk_spec(int n) {
  ObjectiveSpec s;
  s.name = "griewangk";
  s.domain = SearchDomain(n, -512.0, 512.0);
  s.evaluator = [](std::span<const double> x) { return eval_griewangk(x); };
  s.optimum_point.assign(n, 0.0);
  s.optimum_value = 0.0;
  return s;
}

ObjectiveSpec rastrigin_spec(int n) {
  ObjectiveSpec s;
  s.name = "rastrigin";
  s.domain = SearchDomain(n, -50.0, 50.0);
  s.evaluator = [](std::span<const double> x) { return eval_rastrigin(x); };
  s.optimum_point.assign(n, 0.0);
  s.optimum_value = 0.0;
  return s;
}

ObjectiveSpec ackley_spec(int n) {
  ObjectiveSpec s;
  s.name = "ackley";
  s.domain = SearchDomain(n, -100.0, 100.0);
  s.evaluator = [](std::span<const double> x) { return eval_ackley(x); };
  s.optimum_point.assign(n, 0.0);
  s.optimum_value = 0.0;
  return s;
}

ObjectiveSpec rana_spec(int n) {
  ObjectiveSpec s;
  s.name = "rana";
  s.domain = SearchDomain(n, -520.0, 520.0);
  s.evaluator = [](std::span<const double> x) { return eval_rana(x); };
  // Best known point sits on the diagonal just outside [-512, 512], hence the
  // widened box. The stored value is whatever direct evaluation yields there;
  // nothing downstream assumes it is a hand-derived closed form.
  s.optimum_point.assign(n, -514.04);
  s.optimum_value = eval_rana(s.optimum_point);
  return s;
}

std::vector<ObjectiveSpec> builtin_suite() {
  std::vector<ObjectiveSpec> suite;
  suite.push_back(griewangk_spec());
  suite.push_back(rastrigin_spec());
  suite.push_back(ackley_spec());
  suite.push_back(rana_spec());
  return suite;
}

std::optional<ObjectiveSpec> builtin_objective(std::string_view name) {
  if (name == "griewangk") return griewangk_spec();
  if (name == "rastrigin") return rastrigin_spec();
  if (name == "ackley") return ackley_spec();
  if (name == "rana") return rana_spec();
  return std::nullopt;
}

}  // namespace quenchlab
