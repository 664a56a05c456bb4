#include "quenchlab/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quenchlab/rng.hpp"

namespace quenchlab {

void DiffusionPath::validate() const {
  if (times.size() != values.size())
    throw std::domain_error("diffusion path: times/values size mismatch");
  if (times.size() < 2)
    throw std::domain_error("diffusion path: need at least two observations");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::domain_error("diffusion path: times must be strictly increasing");
  for (double v : values)
    if (!(v > 0.0))
      throw std::domain_error("diffusion path: values must be positive");
}

DiffusionPath simulate_path(double m, double sigma2,
                            const std::vector<double>& times, double x1,
                            std::uint64_t seed) {
  if (times.size() < 2)
    throw std::domain_error("simulate_path: need at least two times");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::domain_error("simulate_path: times must be strictly increasing");
  if (!(x1 > 0.0)) throw std::domain_error("simulate_path: x1 must be positive");
  if (sigma2 < 0.0) throw std::domain_error("simulate_path: sigma2 must be >= 0");

  SplitMix64 rng(seed);
  DiffusionPath p;
  p.times = times;
  p.values.resize(times.size());
  p.values[0] = x1;
  double lx = std::log(x1);
  const double drift = m - sigma2 / 2.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double dt = times[i] - times[i - 1];
    lx += drift * dt + std::sqrt(sigma2 * dt) * rng.normal();
    p.values[i] = std::exp(lx);
  }
  return p;
}

double log_likelihood(const DiffusionPath& path, double a, double sigma2) {
  path.validate();
  if (!(sigma2 > 0.0))
    throw std::domain_error("log_likelihood: sigma2 must be positive");
  const std::size_t n = path.values.size();
  const double n1 = static_cast<double>(n - 1);
  double quad = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double dlx = std::log(path.values[i]) - std::log(path.values[i - 1]);
    const double dt = path.times[i] - path.times[i - 1];
    quad += dlx * dlx / dt + a * a * dt - 2.0 * a * dlx;
  }
  return -0.5 * n1 * std::log(2.0 * std::numbers::pi) -
         0.5 * n1 * std::log(sigma2) - quad / (2.0 * sigma2);
}

LikelihoodValue likelihood(const DiffusionPath& path, double a, double sigma2) {
  const double ll = log_likelihood(path, a, sigma2);
  constexpr double max_exp = 709.782712893383996;  // log of largest finite double
  if (ll > max_exp)
    return {std::numeric_limits<double>::max(), true};
  return {std::exp(ll), false};
}

MleEstimate closed_form_mle(const DiffusionPath& path) {
  path.validate();
  const std::size_t n = path.values.size();
  MleEstimate e;
  e.a = (std::log(path.values[n - 1]) - std::log(path.values[0])) /
        (path.times[n - 1] - path.times[0]);
  double s = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double dlx = std::log(path.values[i]) - std::log(path.values[i - 1]);
    const double dt = path.times[i] - path.times[i - 1];
    const double r = dlx - e.a * dt;
    s += r * r / dt;
  }
  e.sigma2 = s / static_cast<double>(n - 1);
  return e;
}

ObjectiveSpec likelihood_objective(const DiffusionPath& path) {
  path.validate();
  const std::size_t n = path.values.size();
  const double n1 = static_cast<double>(n - 1);

  // Sufficient statistics: the quadratic form regroups to
  // S1 - 2 a S3 + a^2 S2, making each evaluation O(1).
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double dlx = std::log(path.values[i]) - std::log(path.values[i - 1]);
    const double dt = path.times[i] - path.times[i - 1];
    s1 += dlx * dlx / dt;
    s2 += dt;
    s3 += dlx;
  }
  const double c0 = 0.5 * n1 * std::log(2.0 * std::numbers::pi);

  ObjectiveSpec spec;
  spec.name = "likelihood";
  spec.domain = SearchDomain({-1.0, std::log(kLikelihoodSigma2Min)},
                             {1.0, std::log(kLikelihoodSigma2Max)});
  spec.evaluator = [n1, s1, s2, s3, c0](std::span<const double> x) {
    if (x.size() != 2)
      throw std::domain_error("likelihood objective: expects (a, ln sigma2)");
    const double a = x[0];
    const double ls2 = x[1];
    const double s2v = std::exp(ls2);
    return c0 + 0.5 * n1 * ls2 + (s1 - 2.0 * a * s3 + a * a * s2) / (2.0 * s2v);
  };

  const MleEstimate mle = closed_form_mle(path);
  const double a_hat = std::clamp(mle.a, -1.0, 1.0);
  const double s2_hat =
      std::clamp(mle.sigma2, kLikelihoodSigma2Min, kLikelihoodSigma2Max);
  spec.optimum_point = {a_hat, std::log(s2_hat)};
  spec.optimum_value = spec.evaluator(spec.optimum_point);
  return spec;
}

}  // namespace quenchlab
