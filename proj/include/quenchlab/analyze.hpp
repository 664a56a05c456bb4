#pragma once

#include <span>
#include <string>
#include <vector>

#include "quenchlab/runner.hpp"
#include "quenchlab/stat_analysis.hpp"

namespace quenchlab {

enum class Direction { Minimize, Maximize };

// "likelihood" is maximized; everything else is distance-to-optimum.
Direction problem_direction(std::string_view problem);

enum class FactorStatus {
  Ok,
  SingleLevel,  // factor has one level in the data; nothing to compare
  NoVariance,   // every response identical; ANOVA undefined
};

struct FactorAnalysis {
  std::string factor;  // CS, NC, NI, PS, IT
  FactorStatus status = FactorStatus::Ok;
  AnovaTable anova;            // valid when status == Ok
  bool levene_ok = false;      // degenerate spread or skipped when false
  LeveneResult levene_result;  // valid when levene_ok
  std::vector<LevelMean> means;
  std::vector<FiveNumberSummary> boxplots;
  TukeyResult tukey;  // valid when status == Ok; carries its own warning flag
};

struct AnalysisReport {
  std::string problem;
  Direction direction = Direction::Minimize;
  double alpha = 0.05;
  long long n_records = 0;
  std::vector<FactorAnalysis> factors;  // CS, NC, NI, PS, IT order
};

// Per-factor one-way analysis of the records of one problem. Level order is
// first appearance in record order (enumeration order for generated sets).
AnalysisReport analyze_problem(std::span<const RunRecord> records,
                               const std::string& problem, double alpha,
                               Direction direction);

// Splits mixed-problem result sets and analyzes each with its natural
// direction; reports come out in first-appearance order.
std::vector<AnalysisReport> analyze(const ResultSet& rs, double alpha);

// Writes one report into dir as TSV: per factor F, anova_F.tsv, means_F.tsv,
// tukey_F.tsv, boxplot_F.tsv, plus a summary.tsv header sheet. Deterministic
// bytes for identical input. Column layouts are documented in the README.
void write_report_tsv(const AnalysisReport& report, const std::string& dir);

}  // namespace quenchlab
