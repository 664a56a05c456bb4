#include "quenchlab/stat_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "quenchlab/stat_dist.hpp"

namespace quenchlab {

void GroupedSample::validate() const {
  if (levels.size() != responses.size())
    throw std::invalid_argument("grouped sample: levels/responses size mismatch");
  if (levels.empty())
    throw std::invalid_argument("grouped sample: no levels");
  std::unordered_set<std::string> seen;
  for (const auto& l : levels)
    if (!seen.insert(l).second)
      throw std::invalid_argument("grouped sample: duplicate level '" + l + "'");
  for (std::size_t i = 0; i < responses.size(); ++i)
    if (responses[i].empty())
      throw std::invalid_argument("grouped sample: level '" + levels[i] +
                                  "' has no observations");
}

long long GroupedSample::total_observations() const {
  long long n = 0;
  for (const auto& r : responses) n += static_cast<long long>(r.size());
  return n;
}

namespace {

struct SumsOfSquares {
  std::vector<double> group_means;
  double grand_mean = 0.0;
  double ss_between = 0.0;  // divided by scale^2 when scale != 1
  double ss_within = 0.0;
  double scale = 1.0;  // rescue factor for data near the double ceiling
  long long n_total = 0;
};

// Restore a (possibly rescaled) sum of squares to data units. Saturates to
// infinity when the true value exceeds the largest finite double; an exact
// zero stays zero.
double restore_ss(const SumsOfSquares& s, double ss) {
  if (ss == 0.0 || s.scale == 1.0) return ss;
  return ss * s.scale * s.scale;
}

// Two-pass decomposition: group means first, deviations second. Responses
// near the double ceiling (raw likelihoods reach 1e190) have squared
// deviations past it, so on overflow the deviations are re-accumulated
// divided by their largest magnitude. F statistics are ratios of the sums
// and shed the common factor; reports in data units go through restore_ss.
SumsOfSquares decompose(const GroupedSample& g) {
  SumsOfSquares s;
  double total = 0.0;
  for (const auto& r : g.responses) {
    double gsum = 0.0;
    for (double y : r) gsum += y;
    s.group_means.push_back(gsum / static_cast<double>(r.size()));
    total += gsum;
    s.n_total += static_cast<long long>(r.size());
  }
  s.grand_mean = total / static_cast<double>(s.n_total);
  for (std::size_t k = 0; k < g.responses.size(); ++k) {
    const double gm = s.group_means[k];
    for (double y : g.responses[k]) s.ss_within += (y - gm) * (y - gm);
    const double d = gm - s.grand_mean;
    s.ss_between += static_cast<double>(g.responses[k].size()) * d * d;
  }
  if (std::isfinite(s.ss_within) && std::isfinite(s.ss_between)) return s;

  for (std::size_t k = 0; k < g.responses.size(); ++k) {
    const double gm = s.group_means[k];
    for (double y : g.responses[k])
      s.scale = std::max(s.scale, std::fabs(y - gm));
    s.scale = std::max(s.scale, std::fabs(gm - s.grand_mean));
  }
  s.ss_within = 0.0;
  s.ss_between = 0.0;
  for (std::size_t k = 0; k < g.responses.size(); ++k) {
    const double gm = s.group_means[k];
    for (double y : g.responses[k]) {
      const double d = (y - gm) / s.scale;
      s.ss_within += d * d;
    }
    const double d = (gm - s.grand_mean) / s.scale;
    s.ss_between += static_cast<double>(g.responses[k].size()) * d * d;
  }
  return s;
}

void require_anova_shape(const GroupedSample& g) {
  g.validate();
  if (g.levels.size() < 2)
    throw std::invalid_argument("anova: need at least two levels");
  for (std::size_t i = 0; i < g.responses.size(); ++i)
    if (g.responses[i].size() < 2)
      throw std::invalid_argument("anova: level '" + g.levels[i] +
                                  "' needs at least two observations");
}

}  // namespace

AnovaTable one_way_anova(const GroupedSample& sample, double alpha) {
  require_anova_shape(sample);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("anova: alpha must lie in (0, 1)");

  const SumsOfSquares s = decompose(sample);
  AnovaTable t;
  t.df_between = static_cast<long long>(sample.levels.size()) - 1;
  t.df_within = s.n_total - static_cast<long long>(sample.levels.size());
  // mean squares in (possibly rescaled) working units; F is their ratio
  const double msb = s.ss_between / static_cast<double>(t.df_between);
  const double msw = s.ss_within / static_cast<double>(t.df_within);
  t.ss_between = restore_ss(s, s.ss_between);
  t.ss_within = restore_ss(s, s.ss_within);
  t.ms_between = restore_ss(s, msb);
  t.ms_within = restore_ss(s, msw);
  if (s.ss_between == 0.0 && s.ss_within == 0.0)
    throw std::domain_error("no variance");
  if (s.ss_within == 0.0) {
    t.degenerate = true;
    t.f_value = std::numeric_limits<double>::infinity();
    t.p_value = 0.0;
    t.significant = true;
    return t;
  }
  t.f_value = msb / msw;
  t.p_value = f_sf(t.f_value, static_cast<double>(t.df_between),
                   static_cast<double>(t.df_within));
  t.significant = t.p_value < alpha;
  return t;
}

TukeyResult tukey_hsd(const GroupedSample& sample, const AnovaTable& anova,
                      double alpha) {
  require_anova_shape(sample);
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("tukey: alpha must lie in (0, 1)");

  const SumsOfSquares s = decompose(sample);
  const int k = static_cast<int>(sample.levels.size());
  // the interval half-width needs sqrt(MSW), which stays representable even
  // when MSW itself saturated; rebuild it from the rescaled decomposition
  const bool msw_saturated = !std::isfinite(anova.ms_within);
  const double root_msw =
      msw_saturated
          ? std::sqrt(s.ss_within / static_cast<double>(anova.df_within)) *
                s.scale
          : 0.0;
  TukeyResult res;
  res.anova_significant = anova.significant;
  res.critical_q = studentized_range_quantile(
      1.0 - alpha, k, static_cast<double>(anova.df_within));
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double na = static_cast<double>(sample.responses[a].size());
      const double nb = static_cast<double>(sample.responses[b].size());
      const double half =
          msw_saturated
              ? res.critical_q * root_msw *
                    std::sqrt(0.5 * (1.0 / na + 1.0 / nb))
              : res.critical_q *
                    std::sqrt(anova.ms_within / 2.0 * (1.0 / na + 1.0 / nb));
      TukeyComparison c;
      c.level_a = sample.levels[a];
      c.level_b = sample.levels[b];
      c.mean_diff = s.group_means[a] - s.group_means[b];
      c.ci_low = c.mean_diff - half;
      c.ci_high = c.mean_diff + half;
      c.significant = (c.ci_low > 0.0) || (c.ci_high < 0.0);
      res.comparisons.push_back(std::move(c));
    }
  }
  return res;
}

LeveneResult levene(const GroupedSample& sample) {
  require_anova_shape(sample);

  GroupedSample z;
  z.factor_name = sample.factor_name;
  z.levels = sample.levels;
  bool any_nonzero = false;
  for (const auto& r : sample.responses) {
    double mean = 0.0;
    for (double y : r) mean += y;
    mean /= static_cast<double>(r.size());
    std::vector<double> dev;
    dev.reserve(r.size());
    for (double y : r) {
      const double d = std::fabs(y - mean);
      if (d != 0.0) any_nonzero = true;
      dev.push_back(d);
    }
    z.responses.push_back(std::move(dev));
  }
  if (!any_nonzero) throw std::domain_error("degenerate spread");

  const SumsOfSquares s = decompose(z);
  LeveneResult res;
  const long long dfb = static_cast<long long>(z.levels.size()) - 1;
  const long long dfw = s.n_total - static_cast<long long>(z.levels.size());
  if (s.ss_within == 0.0) {
    if (s.ss_between == 0.0) {
      // every deviation equal: spreads match exactly
      res.w = 0.0;
      res.p_value = 1.0;
      return res;
    }
    res.w = std::numeric_limits<double>::infinity();
    res.p_value = 0.0;
    return res;
  }
  res.w = (s.ss_between / static_cast<double>(dfb)) /
          (s.ss_within / static_cast<double>(dfw));
  res.p_value = f_sf(res.w, static_cast<double>(dfb), static_cast<double>(dfw));
  return res;
}

std::vector<LevelMean> means_table(const GroupedSample& sample) {
  sample.validate();
  std::vector<LevelMean> out;
  for (std::size_t i = 0; i < sample.levels.size(); ++i) {
    double sum = 0.0;
    for (double y : sample.responses[i]) sum += y;
    out.push_back({sample.levels[i],
                   static_cast<long long>(sample.responses[i].size()),
                   sum / static_cast<double>(sample.responses[i].size())});
  }
  return out;
}

double sample_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile: empty sample");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("quantile: p must lie in [0, 1]");
  const std::size_t n = sorted.size();
  const double pos = 1.0 + (static_cast<double>(n) - 1.0) * p;  // 1-based
  const double fl = std::floor(pos);
  const std::size_t lo = static_cast<std::size_t>(fl) - 1;
  const double frac = pos - fl;
  if (lo + 1 >= n) return sorted[n - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<FiveNumberSummary> boxplot_summary(const GroupedSample& sample) {
  sample.validate();
  std::vector<FiveNumberSummary> out;
  for (std::size_t i = 0; i < sample.levels.size(); ++i) {
    std::vector<double> v = sample.responses[i];
    std::sort(v.begin(), v.end());
    FiveNumberSummary s;
    s.level = sample.levels[i];
    s.n = static_cast<long long>(v.size());
    s.min = v.front();
    s.max = v.back();
    s.q1 = sample_quantile(v, 0.25);
    s.median = sample_quantile(v, 0.5);
    s.q3 = sample_quantile(v, 0.75);
    const double iqr = s.q3 - s.q1;
    const double fence_low = s.q1 - 1.5 * iqr;
    const double fence_high = s.q3 + 1.5 * iqr;
    s.whisker_low = s.max;
    s.whisker_high = s.min;
    for (double y : v) {
      if (y < fence_low || y > fence_high) {
        s.outliers.push_back(y);
      } else {
        s.whisker_low = std::min(s.whisker_low, y);
        s.whisker_high = std::max(s.whisker_high, y);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace quenchlab
