#pragma once

#include <span>
#include <string>
#include <vector>

namespace quenchlab {

// Observations grouped by factor level. Level order is meaningful (it is the
// order comparisons and report rows come out in) and labels must be unique.
struct GroupedSample {
  std::string factor_name;
  std::vector<std::string> levels;
  std::vector<std::vector<double>> responses;  // responses[i] belongs to levels[i]

  // throws std::invalid_argument on shape violations (mismatched sizes,
  // duplicate labels, an empty level)
  void validate() const;
  long long total_observations() const;
};

struct AnovaTable {
  long long df_between = 0;
  long long df_within = 0;
  double ss_between = 0.0;
  double ss_within = 0.0;
  double ms_between = 0.0;
  double ms_within = 0.0;
  double f_value = 0.0;
  double p_value = 1.0;
  bool significant = false;
  // zero within-group variance against non-zero between-group spread:
  // F is +inf and p is 0 by convention
  bool degenerate = false;
};

// One-way fixed-effects ANOVA. Needs >= 2 levels with >= 2 observations each.
// Throws std::domain_error("no variance") when every observation is identical.
AnovaTable one_way_anova(const GroupedSample& sample, double alpha);

struct TukeyComparison {
  std::string level_a;
  std::string level_b;
  double mean_diff = 0.0;  // mean(level_a) - mean(level_b)
  double ci_low = 0.0;
  double ci_high = 0.0;
  bool significant = false;  // 0 outside the interval
};

struct TukeyResult {
  double critical_q = 0.0;     // studentized-range quantile used
  bool anova_significant = false;  // comparisons are advisory when this is false
  std::vector<TukeyComparison> comparisons;  // all pairs, level order
};

// Tukey HSD with the unbalanced (Tukey-Kramer) half-width
//   q_{1-alpha,k,df_within} * sqrt(ms_within/2 * (1/n_a + 1/n_b)).
TukeyResult tukey_hsd(const GroupedSample& sample, const AnovaTable& anova,
                      double alpha);

struct LeveneResult {
  double w = 0.0;
  double p_value = 1.0;
};

// Levene's homogeneity-of-variance test on mean-centered absolute deviations.
// Throws std::domain_error("degenerate spread") when every deviation is zero.
LeveneResult levene(const GroupedSample& sample);

struct LevelMean {
  std::string level;
  long long n = 0;
  double mean = 0.0;
};

std::vector<LevelMean> means_table(const GroupedSample& sample);

struct FiveNumberSummary {
  std::string level;
  long long n = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double whisker_low = 0.0;   // most extreme point within 1.5 IQR below q1
  double whisker_high = 0.0;  // most extreme point within 1.5 IQR above q3
  std::vector<double> outliers;  // points beyond the fences, ascending
};

std::vector<FiveNumberSummary> boxplot_summary(const GroupedSample& sample);

// Quantile of a sorted sample by linear interpolation of order statistics at
// 1-based position 1 + (n-1)p. Exposed because the boxplot convention is part
// of the reporting contract.
double sample_quantile(std::span<const double> sorted, double p);

}  // namespace quenchlab
