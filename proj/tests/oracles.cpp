#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "quenchlab/rng.hpp"

namespace oracles {

double simpson(const std::function<double(double)>& f, double a, double b,
               int n) {
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += f(a + i * h);
  for (int i = 2; i < n; i += 2) even += f(a + i * h);
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

double beta_inc(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  // I_x(a,b) = B(a,b)^-1 int_0^x t^(a-1) (1-t)^(b-1) dt; with t = sin^2 u the
  // integrand becomes 2 sin^(2a-1) u cos^(2b-1) u, smooth for a, b >= 1/2.
  const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  // base^0 must count as 1 even at the endpoints where the base is 0
  auto pow_log = [](double expo, double base) {
    if (expo == 0.0) return 0.0;
    if (base <= 0.0) return -1e300;
    return expo * std::log(base);
  };
  auto g = [&](double u) {
    const double s = std::sin(u), c = std::cos(u);
    return 2.0 * std::exp(log_norm + pow_log(2.0 * a - 1.0, s) +
                          pow_log(2.0 * b - 1.0, c));
  };
  const double upper = std::asin(std::sqrt(x));
  return simpson(g, 0.0, upper, 20000);
}

AnovaOracle anova(const std::vector<std::vector<double>>& groups) {
  long double grand_sum = 0.0L;
  long long n_total = 0;
  for (const auto& g : groups) {
    if (g.empty()) throw std::invalid_argument("oracle: empty group");
    for (double v : g) grand_sum += v;
    n_total += static_cast<long long>(g.size());
  }
  const long double grand_mean = grand_sum / n_total;

  long double ssb = 0.0L, ssw = 0.0L, sst = 0.0L;
  for (const auto& g : groups) {
    long double sum = 0.0L;
    for (double v : g) sum += v;
    const long double mean = sum / static_cast<long double>(g.size());
    ssb += static_cast<long double>(g.size()) * (mean - grand_mean) *
           (mean - grand_mean);
    for (double v : g) {
      ssw += (v - mean) * (v - mean);
      sst += (v - grand_mean) * (v - grand_mean);
    }
  }

  AnovaOracle out;
  out.ssb = static_cast<double>(ssb);
  out.ssw = static_cast<double>(ssw);
  out.sst = static_cast<double>(sst);
  out.df_between = static_cast<long long>(groups.size()) - 1;
  out.df_within = n_total - static_cast<long long>(groups.size());
  const long double msb = ssb / out.df_between;
  const long double msw = ssw / out.df_within;
  out.f = static_cast<double>(msb / msw);
  return out;
}

namespace {

double chi2_mean_square(int df, quenchlab::SplitMix64& rng) {
  double s = 0.0;
  for (int i = 0; i < df; ++i) {
    const double z = rng.normal();
    s += z * z;
  }
  return s / df;
}

}  // namespace

std::vector<double> mc_f_sample(int d1, int d2, int samples,
                                std::uint64_t seed) {
  quenchlab::SplitMix64 rng(seed);
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (double& v : out)
    v = chi2_mean_square(d1, rng) / chi2_mean_square(d2, rng);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> mc_range_sample(int k, double df, int samples,
                                    std::uint64_t seed) {
  quenchlab::SplitMix64 rng(seed);
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (double& v : out) {
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < k; ++i) {
      const double z = rng.normal();
      if (i == 0) {
        lo = hi = z;
      } else {
        lo = std::min(lo, z);
        hi = std::max(hi, z);
      }
    }
    double s = 1.0;
    if (df > 0.0) {
      // Wilson-Hilferty: chi2_df / df ~ (1 - 2/(9 df) + z sqrt(2/(9 df)))^3.
      const double c = 2.0 / (9.0 * df);
      const double w = 1.0 - c + rng.normal() * std::sqrt(c);
      s = std::sqrt(std::max(w * w * w, 1e-30));
    }
    v = (hi - lo) / s;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double ecdf(const std::vector<double>& sorted, double x) {
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
  return static_cast<double>(it - sorted.begin()) /
         static_cast<double>(sorted.size());
}

double mc_quantile(std::vector<double>& sample, double p) {
  std::sort(sample.begin(), sample.end());
  const double pos = p * (static_cast<double>(sample.size()) - 1.0);
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= sample.size()) return sample.back();
  const double frac = pos - static_cast<double>(i);
  return sample[i] + frac * (sample[i + 1] - sample[i]);
}

}  // namespace oracles
