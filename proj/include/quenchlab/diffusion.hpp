#pragma once

#include <cstdint>
#include <vector>

#include "quenchlab/objectives.hpp"

namespace quenchlab {

// A strictly positive sample path observed at strictly increasing times.
struct DiffusionPath {
  std::vector<double> times;
  std::vector<double> values;

  int size() const { return static_cast<int>(times.size()); }
  // throws std::domain_error: fewer than 2 points, non-increasing times,
  // or a non-positive value
  void validate() const;
};

// Exact lognormal transition sampling:
//   ln x_i = ln x_{i-1} + (m - sigma2/2) dt + sqrt(sigma2 dt) z,  z ~ N(0,1).
// One normal draw per step, in time order, from SplitMix64(seed).
DiffusionPath simulate_path(double m, double sigma2,
                            const std::vector<double>& times, double x1,
                            std::uint64_t seed);

// Exact log-likelihood of the path under drift parameter a = m - sigma2/2:
//   -((n-1)/2) ln(2 pi) - ((n-1)/2) ln sigma2
//   - (1/(2 sigma2)) sum[ (dlnx)^2/dt + a^2 dt - 2 a dlnx ]
double log_likelihood(const DiffusionPath& path, double a, double sigma2);

struct LikelihoodValue {
  double value = 0.0;
  bool overflow = false;  // exp would exceed the largest finite double
};

// exp(log_likelihood), saturating at the largest finite double with the
// overflow flag set (likelihoods here routinely reach e^400+).
LikelihoodValue likelihood(const DiffusionPath& path, double a, double sigma2);

struct MleEstimate {
  double a = 0.0;
  double sigma2 = 0.0;
};

// Closed-form maximizers:
//   a_hat = (ln x_n - ln x_1) / (t_n - t_1)
//   sigma2_hat = (1/(n-1)) sum (dlnx - a_hat dt)^2 / dt
MleEstimate closed_form_mle(const DiffusionPath& path);

// 2-dimensional minimization objective for -log_likelihood over the box
// a in [-1, 1], sigma2 in [1e-12, 1]. Coordinate 0 is a; coordinate 1 is
// ln(sigma2) — the variance spans 12 decades, so it is searched on a log
// scale (a fixed-width uniform mutation on the raw value cannot resolve an
// optimum near 1e-5). Stored optimum is the closed-form MLE, clamped into
// the box.
ObjectiveSpec likelihood_objective(const DiffusionPath& path);

// Search-box limits shared by likelihood_objective and its reporting side.
inline constexpr double kLikelihoodSigma2Min = 1e-12;
inline constexpr double kLikelihoodSigma2Max = 1.0;

}  // namespace quenchlab
