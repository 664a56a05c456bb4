#include "quenchlab/stat_dist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace quenchlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double phi_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
}

// integer power by repeated multiplication; exponents here are tiny (k - 1)
double ipow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
// Computed once per order and cached; accurate to ~1e-15.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

const std::vector<double>& gl16_nodes() {
  static std::vector<double> x = [] {
    std::vector<double> xs, ws;
    gauss_legendre(16, xs, ws);
    return xs;
  }();
  return x;
}

const std::vector<double>& gl16_weights() {
  static std::vector<double> w = [] {
    std::vector<double> xs, ws;
    gauss_legendre(16, xs, ws);
    return ws;
  }();
  return w;
}

// P(range of k iid standard normals <= w). Classical representation:
// conditioning on the location z of the maximum gives
//   k * Integral phi(z) * [Phi(z) - Phi(z - w)]^(k-1) dz.
double range_cdf_known_sigma(double w, int k) {
  if (w <= 0.0) return 0.0;
  const auto& xs = gl16_nodes();
  const auto& ws = gl16_weights();
  const double lo = -8.5;
  const double hi = w + 8.5;
  const int nseg = std::max(24, static_cast<int>(std::ceil((hi - lo) / 0.75)));
  const double h = (hi - lo) / nseg;
  double total = 0.0;
  for (int s = 0; s < nseg; ++s) {
    const double a = lo + s * h;
    const double c = a + 0.5 * h;
    double part = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double z = c + 0.5 * h * xs[j];
      const double bracket = std_normal_cdf(z) - std_normal_cdf(z - w);
      part += ws[j] * phi_pdf(z) * ipow(bracket, k - 1);
    }
    total += part * 0.5 * h;
  }
  return std::clamp(k * total, 0.0, 1.0);
}

// Density of s = sqrt(chi2_df / df) (the scale factor multiplying sigma in a
// pooled standard-deviation estimate), evaluated through logs to survive
// large df.
double chi_scale_log_pdf(double s, double df, double log_norm) {
  return log_norm + (df - 1.0) * std::log(s) - 0.5 * df * s * s;
}

}  // namespace

double std_normal_cdf(double x) {
  return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

namespace {

// Lentz continued-fraction kernel for the incomplete beta.
double betacf(double a, double b, double x) {
  constexpr double EPS = 1e-15;
  constexpr double FPMIN = 1e-300;
  constexpr int MAXIT = 500;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < FPMIN) d = FPMIN;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= MAXIT; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < FPMIN) d = FPMIN;
    c = 1.0 + aa / c;
    if (std::fabs(c) < FPMIN) c = FPMIN;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < FPMIN) d = FPMIN;
    c = 1.0 + aa / c;
    if (std::fabs(c) < FPMIN) c = FPMIN;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < EPS) return h;
  }
  throw std::runtime_error("incomplete beta: continued fraction failed to converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("incomplete beta: a and b must be positive");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("incomplete beta: x must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return x;
  const double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  const double front = std::exp(lbeta + a * std::log(x) + b * std::log1p(-x));
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double f_cdf(double x, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0))
    throw std::domain_error("f_cdf: degrees of freedom must be positive");
  if (!(x > 0.0)) return 0.0;
  return regularized_incomplete_beta(d1 / 2.0, d2 / 2.0, d1 * x / (d1 * x + d2));
}

double f_sf(double x, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0))
    throw std::domain_error("f_sf: degrees of freedom must be positive");
  if (!(x > 0.0)) return 1.0;
  return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d1 * x + d2));
}

double studentized_range_cdf(double q, int k, double df) {
  if (k < 2) throw std::domain_error("studentized range: k must be >= 2");
  if (!(df > 0.0)) throw std::domain_error("studentized range: df must be positive");
  if (!(q > 0.0)) return 0.0;
  if (df >= 1e6) return range_cdf_known_sigma(q, k);

  // Average the known-sigma CDF over the chi-scale distribution of the
  // pooled estimate. The integration window comes from the Wilson-Hilferty
  // cube-root normal approximation of chi2/df, padded to ~9 sigma.
  const double mu = 1.0 - 2.0 / (9.0 * df);
  const double sd = std::sqrt(2.0 / (9.0 * df));
  const double ylo = std::max(0.0, mu - 9.0 * sd);
  const double yhi = mu + 9.0 * sd;
  const double slo = std::pow(ylo, 1.5);
  const double shi = std::pow(yhi, 1.5);
  const double log_norm = std::log(2.0) + 0.5 * df * std::log(0.5 * df) -
                          std::lgamma(0.5 * df);

  const auto& xs = gl16_nodes();
  const auto& ws = gl16_weights();
  const int nseg = 36;
  const double h = (shi - slo) / nseg;
  double total = 0.0;
  for (int s = 0; s < nseg; ++s) {
    const double a = slo + s * h;
    const double c = a + 0.5 * h;
    double part = 0.0;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double sv = c + 0.5 * h * xs[j];
      if (sv <= 0.0) continue;
      const double lp = chi_scale_log_pdf(sv, df, log_norm);
      if (lp < -700.0) continue;
      part += ws[j] * std::exp(lp) * range_cdf_known_sigma(q * sv, k);
    }
    total += part * 0.5 * h;
  }
  return std::clamp(total, 0.0, 1.0);
}

double studentized_range_quantile(double p, int k, double df) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("studentized range quantile: p must lie in (0, 1)");
  if (k < 2) throw std::domain_error("studentized range: k must be >= 2");
  if (!(df > 0.0)) throw std::domain_error("studentized range: df must be positive");

  using Key = std::tuple<double, int, double>;
  static std::map<Key, double> cache;
  static std::mutex cache_mutex;
  const Key key{p, k, df};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  double lo = 0.0;
  double hi = 1.0;
  while (studentized_range_cdf(hi, k, df) < p) {
    hi *= 2.0;
    if (hi > 1e4)
      throw std::runtime_error("studentized range quantile: bracket blew up");
  }
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (studentized_range_cdf(mid, k, df) < p)
      lo = mid;
    else
      hi = mid;
  }
  const double q = 0.5 * (lo + hi);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, q);
  }
  return q;
}

}  // namespace quenchlab
