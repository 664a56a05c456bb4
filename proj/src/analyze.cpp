#include "quenchlab/analyze.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "quenchlab/csv.hpp"

namespace quenchlab {

Direction problem_direction(std::string_view problem) {
  return problem == "likelihood" ? Direction::Maximize : Direction::Minimize;
}

namespace {

struct FactorDef {
  const char* name;
  std::function<std::string(const RunRecord&)> label;
};

const std::vector<FactorDef>& factor_defs() {
  static const std::vector<FactorDef> defs = {
      {"CS", [](const RunRecord& r) { return std::string(1, schedule_code(r.cs)); }},
      {"NC", [](const RunRecord& r) { return std::to_string(r.nc); }},
      {"NI", [](const RunRecord& r) { return std::to_string(r.ni); }},
      {"PS", [](const RunRecord& r) { return std::to_string(r.ps); }},
      {"IT", [](const RunRecord& r) { return format_double(r.it); }},
  };
  return defs;
}

GroupedSample group_by_factor(std::span<const RunRecord> records,
                              const FactorDef& def) {
  GroupedSample g;
  g.factor_name = def.name;
  for (const RunRecord& r : records) {
    const std::string label = def.label(r);
    std::size_t idx = 0;
    for (; idx < g.levels.size(); ++idx)
      if (g.levels[idx] == label) break;
    if (idx == g.levels.size()) {
      g.levels.push_back(label);
      g.responses.emplace_back();
    }
    g.responses[idx].push_back(r.fitness);
  }
  return g;
}

}  // namespace

AnalysisReport analyze_problem(std::span<const RunRecord> records,
                               const std::string& problem, double alpha,
                               Direction direction) {
  if (records.empty())
    throw std::invalid_argument("analyze: no records for problem '" + problem +
                                "'");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("analyze: alpha must lie in (0, 1)");

  AnalysisReport rep;
  rep.problem = problem;
  rep.direction = direction;
  rep.alpha = alpha;
  rep.n_records = static_cast<long long>(records.size());

  for (const FactorDef& def : factor_defs()) {
    FactorAnalysis fa;
    fa.factor = def.name;
    GroupedSample g = group_by_factor(records, def);
    fa.means = means_table(g);
    fa.boxplots = boxplot_summary(g);
    if (g.levels.size() < 2) {
      fa.status = FactorStatus::SingleLevel;
      rep.factors.push_back(std::move(fa));
      continue;
    }
    try {
      fa.anova = one_way_anova(g, alpha);
      fa.status = FactorStatus::Ok;
    } catch (const std::domain_error&) {
      fa.status = FactorStatus::NoVariance;  // identical responses everywhere
      rep.factors.push_back(std::move(fa));
      continue;
    }
    try {
      fa.levene_result = levene(g);
      fa.levene_ok = true;
    } catch (const std::domain_error&) {
      fa.levene_ok = false;
    }
    fa.tukey = tukey_hsd(g, fa.anova, alpha);
    rep.factors.push_back(std::move(fa));
  }
  return rep;
}

std::vector<AnalysisReport> analyze(const ResultSet& rs, double alpha) {
  if (rs.records.empty()) throw std::invalid_argument("analyze: no records");
  std::vector<std::string> problems;
  for (const RunRecord& r : rs.records) {
    bool seen = false;
    for (const auto& p : problems)
      if (p == r.problem) { seen = true; break; }
    if (!seen) problems.push_back(r.problem);
  }
  std::vector<AnalysisReport> out;
  for (const std::string& p : problems) {
    std::vector<RunRecord> subset;
    for (const RunRecord& r : rs.records)
      if (r.problem == p) subset.push_back(r);
    out.push_back(analyze_problem(subset, p, alpha, problem_direction(p)));
  }
  return out;
}

namespace {

const char* status_str(FactorStatus s) {
  switch (s) {
    case FactorStatus::Ok: return "ok";
    case FactorStatus::SingleLevel: return "single_level";
    case FactorStatus::NoVariance: return "no_variance";
  }
  return "?";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot open for writing: " + p.string());
  return out;
}

void write_anova_file(const FactorAnalysis& fa,
                      const std::filesystem::path& dir) {
  auto out = open_out(dir / ("anova_" + fa.factor + ".tsv"));
  out << "factor\tstatus\tdf_between\tdf_within\tss_between\tss_within"
         "\tms_between\tms_within\tf_value\tp_value\tsignificant"
         "\tlevene_w\tlevene_p\n";
  out << fa.factor << '\t' << status_str(fa.status);
  if (fa.status == FactorStatus::Ok) {
    const AnovaTable& a = fa.anova;
    out << '\t' << a.df_between << '\t' << a.df_within << '\t'
        << format_double(a.ss_between) << '\t' << format_double(a.ss_within)
        << '\t' << format_double(a.ms_between) << '\t'
        << format_double(a.ms_within) << '\t' << format_double(a.f_value)
        << '\t' << format_double(a.p_value) << '\t' << bool_str(a.significant);
    if (fa.levene_ok)
      out << '\t' << format_double(fa.levene_result.w) << '\t'
          << format_double(fa.levene_result.p_value);
    else
      out << "\tnan\tnan";
  } else {
    // pad the remaining 11 columns so every row parses the same
    for (int i = 0; i < 11; ++i) out << "\tnan";
  }
  out << '\n';
}

void write_means_file(const FactorAnalysis& fa, const std::filesystem::path& dir) {
  auto out = open_out(dir / ("means_" + fa.factor + ".tsv"));
  out << "level\tn\tmean\n";
  for (const LevelMean& m : fa.means)
    out << m.level << '\t' << m.n << '\t' << format_double(m.mean) << '\n';
}

void write_tukey_file(const FactorAnalysis& fa, const std::filesystem::path& dir) {
  auto out = open_out(dir / ("tukey_" + fa.factor + ".tsv"));
  out << "level_a\tlevel_b\tmean_diff\tci_low\tci_high\tsignificant"
         "\tanova_significant\tcritical_q\n";
  if (fa.status != FactorStatus::Ok) return;
  for (const TukeyComparison& c : fa.tukey.comparisons)
    out << c.level_a << '\t' << c.level_b << '\t' << format_double(c.mean_diff)
        << '\t' << format_double(c.ci_low) << '\t' << format_double(c.ci_high)
        << '\t' << bool_str(c.significant) << '\t'
        << bool_str(fa.tukey.anova_significant) << '\t'
        << format_double(fa.tukey.critical_q) << '\n';
}

void write_boxplot_file(const FactorAnalysis& fa,
                        const std::filesystem::path& dir) {
  auto out = open_out(dir / ("boxplot_" + fa.factor + ".tsv"));
  out << "level\tn\tmin\twhisker_low\tq1\tmedian\tq3\twhisker_high\tmax"
         "\toutliers\n";
  for (const FiveNumberSummary& s : fa.boxplots) {
    out << s.level << '\t' << s.n << '\t' << format_double(s.min) << '\t'
        << format_double(s.whisker_low) << '\t' << format_double(s.q1) << '\t'
        << format_double(s.median) << '\t' << format_double(s.q3) << '\t'
        << format_double(s.whisker_high) << '\t' << format_double(s.max) << '\t';
    for (std::size_t i = 0; i < s.outliers.size(); ++i) {
      if (i) out << ';';
      out << format_double(s.outliers[i]);
    }
    out << '\n';
  }
}

}  // namespace

void write_report_tsv(const AnalysisReport& report, const std::string& dir) {
  const std::filesystem::path base(dir);
  std::filesystem::create_directories(base);

  auto summary = open_out(base / "summary.tsv");
  summary << "problem\tdirection\talpha\tn_records\tfactor\tstatus\tf_value"
             "\tp_value\tsignificant\n";
  for (const FactorAnalysis& fa : report.factors) {
    summary << report.problem << '\t'
            << (report.direction == Direction::Maximize ? "maximize" : "minimize")
            << '\t' << format_double(report.alpha) << '\t' << report.n_records
            << '\t' << fa.factor << '\t' << status_str(fa.status);
    if (fa.status == FactorStatus::Ok)
      summary << '\t' << format_double(fa.anova.f_value) << '\t'
              << format_double(fa.anova.p_value) << '\t'
              << bool_str(fa.anova.significant);
    else
      summary << "\tnan\tnan\tnan";
    summary << '\n';
  }

  for (const FactorAnalysis& fa : report.factors) {
    write_anova_file(fa, base);
    write_means_file(fa, base);
    write_tukey_file(fa, base);
    write_boxplot_file(fa, base);
  }
}

}  // namespace quenchlab
