#include "quenchlab/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quenchlab/analyze.hpp"
#include "quenchlab/csv.hpp"
#include "quenchlab/design.hpp"
#include "quenchlab/diffusion.hpp"
#include "quenchlab/errors.hpp"
#include "quenchlab/rng.hpp"
#include "quenchlab/runner.hpp"

namespace quenchlab {
namespace {

struct RunOptions {
  std::string problem;
  std::string design = "full";  // "full", "reduced", or a JSON file path
  int reps = 0;                 // 0: keep the design's own replicate count
  std::uint64_t seed = 0;
  bool seed_given = false;
  int threads = 0;  // 0: one per hardware core
  std::string out;
  std::string path_file;  // observed path for the likelihood problem
};

int do_run(const RunOptions& opt) {
  Design d;
  if (opt.design == "full") {
    d = full_design();
  } else if (opt.design == "reduced") {
    d = reduced_design();
  } else {
    d = load_design_json(opt.design);
  }
  d.problem = opt.problem;
  if (opt.reps > 0) d.reps = opt.reps;
  if (opt.seed_given) d.base_seed = opt.seed;
  d.validate();

  DiffusionPath path;
  const DiffusionPath* path_ptr = nullptr;
  if (!opt.path_file.empty()) {
    if (opt.problem != "likelihood")
      throw std::invalid_argument("--path only applies to the likelihood problem");
    path = read_path_csv(opt.path_file);
    path_ptr = &path;
  }

  ResultSet rs = run_design(d, opt.threads, path_ptr);
  write_csv(opt.out, rs);
  std::printf("%zu runs -> %s (fingerprint %016llx)\n", rs.records.size(),
              opt.out.c_str(),
              static_cast<unsigned long long>(rs.design_fingerprint));
  return 0;
}

struct AnalyzeOptions {
  std::string in;
  double alpha = 0.05;
  std::string out;
};

int do_analyze(const AnalyzeOptions& opt) {
  ResultSet rs = read_csv(opt.in);
  std::vector<AnalysisReport> reports = analyze(rs, opt.alpha);
  // One problem writes straight into the directory; a mixed file gets one
  // subdirectory per problem so the per-factor sheets cannot collide.
  for (const AnalysisReport& rep : reports) {
    std::string dir =
        reports.size() == 1 ? opt.out : opt.out + "/" + rep.problem;
    write_report_tsv(rep, dir);
    int significant = 0;
    for (const FactorAnalysis& f : rep.factors)
      if (f.status == FactorStatus::Ok && f.anova.significant) ++significant;
    std::printf("%s: %lld runs, %d of %zu factors significant -> %s\n",
                rep.problem.c_str(), rep.n_records, significant,
                rep.factors.size(), dir.c_str());
  }
  return 0;
}

struct SimulateOptions {
  double m = 0.0;
  double sigma2 = 1e-5;
  int points = 101;
  double dt = 1.0;
  double x1 = 1.0;
  std::uint64_t seed = 0;
  std::string out;
};

int do_simulate_path(const SimulateOptions& opt) {
  if (opt.points < 2) throw std::invalid_argument("--points must be at least 2");
  if (opt.dt <= 0) throw std::invalid_argument("--dt must be positive");
  std::vector<double> times(static_cast<std::size_t>(opt.points));
  for (int i = 0; i < opt.points; ++i) times[static_cast<std::size_t>(i)] = i * opt.dt;
  DiffusionPath path = simulate_path(opt.m, opt.sigma2, times, opt.x1, opt.seed);
  write_path_csv(opt.out, path);
  MleEstimate mle = closed_form_mle(path);
  std::printf("%d points -> %s (mle a=%.6g sigma2=%.6g)\n", opt.points,
              opt.out.c_str(), mle.a, mle.sigma2);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"Simulated-quenching parameter studies: factorial runs and "
               "one-way ANOVA / Tukey analysis"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "Run a factorial design");
  run->add_option("--problem", run_opt.problem,
                  "griewangk, rastrigin, ackley, rana, or likelihood")
      ->required();
  run->add_option("--design", run_opt.design,
                  "'full', 'reduced', or a design JSON file");
  run->add_option("--reps", run_opt.reps, "override replicates per config")
      ->check(CLI::NonNegativeNumber);
  CLI::Option* seed_opt =
      run->add_option("--seed", run_opt.seed, "override the design base seed");
  run->add_option("--threads", run_opt.threads, "worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--out", run_opt.out, "result CSV to write")->required();
  run->add_option("--path", run_opt.path_file,
                  "observed path CSV for the likelihood problem");

  AnalyzeOptions an_opt;
  CLI::App* an = app.add_subcommand("analyze", "Analyze a result CSV");
  an->add_option("--in", an_opt.in, "result CSV from 'run'")->required();
  an->add_option("--alpha", an_opt.alpha, "significance level (default 0.05)");
  an->add_option("--out", an_opt.out, "directory for the TSV report")
      ->required();

  SimulateOptions sim_opt;
  CLI::App* sim = app.add_subcommand(
      "simulate-path", "Simulate a lognormal diffusion path to CSV");
  sim->add_option("--m", sim_opt.m, "drift m");
  sim->add_option("--sigma2", sim_opt.sigma2, "variance parameter");
  sim->add_option("--points", sim_opt.points, "number of observations");
  sim->add_option("--dt", sim_opt.dt, "time step");
  sim->add_option("--x1", sim_opt.x1, "initial value");
  sim->add_option("--seed", sim_opt.seed, "generator seed");
  sim->add_option("--out", sim_opt.out, "path CSV to write")->required();

  // CLI11's vector overload wants reversed input; the argv form does not.
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("quenchlab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (run->parsed()) {
      run_opt.seed_given = seed_opt->count() > 0;
      return do_run(run_opt);
    }
    if (an->parsed()) return do_analyze(an_opt);
    if (sim->parsed()) return do_simulate_path(sim_opt);
    return 1;  // unreachable with require_subcommand(1)
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // --help exits 0, real parse errors 1
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace quenchlab
