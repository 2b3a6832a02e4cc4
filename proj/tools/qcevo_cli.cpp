// Command-line front end: instance generation, single solver runs, the
// repeated benchmark protocol, and summary-report merging.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qcevo/bench.hpp"
#include "qcevo/instance.hpp"
#include "qcevo/qubo.hpp"

namespace {

struct RunFlags {
  qcevo::SolveOptions base;
  std::string noise_text;
  double penalty = 0.0;
  double optimum = 0.0;
  CLI::Option* noise_opt = nullptr;
  CLI::Option* penalty_opt = nullptr;
  CLI::Option* optimum_opt = nullptr;
};

void add_run_flags(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--shots", flags.base.shots, "Measurement shots per record");
  cmd->add_option("--seed", flags.base.seed, "Base RNG seed");
  cmd->add_option("--max-generations", flags.base.max_generations,
                  "Generation cap for the evolutionary solvers");
  cmd->add_option("--stall-window", flags.base.stall_window,
                  "Stop after this many generations without improvement");
  cmd->add_option("--offspring", flags.base.offspring, "Offspring per generation");
  cmd->add_option("--elitist", flags.base.elitist,
                  "Keep the parent in the selection pool (true/false)");
  cmd->add_option("--layers", flags.base.layers, "QAOA layers");
  cmd->add_option("--max-evals", flags.base.max_evals,
                  "QAOA objective-evaluation budget");
  cmd->add_option("--restarts", flags.base.restarts, "QAOA optimizer restarts");
  flags.noise_opt = cmd->add_option(
      "--noise", flags.noise_text,
      "Noise strengths P,Q (two-qubit depolarizing, readout flip)");
  flags.penalty_opt =
      cmd->add_option("--penalty", flags.penalty, "Uniform penalty RHO override");
  flags.optimum_opt = cmd->add_option(
      "--optimum", flags.optimum, "Known optimum X; skips the brute-force oracle");
}

qcevo::NoiseModel parse_noise(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::runtime_error("--noise expects P,Q");
  }
  qcevo::NoiseModel noise;
  try {
    noise.two_qubit_depolarizing_p = std::stod(text.substr(0, comma));
    noise.readout_flip_q = std::stod(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::runtime_error("--noise expects P,Q as real numbers");
  }
  noise.validate();
  return noise;
}

void finalize_run_flags(RunFlags& flags) {
  if (flags.noise_opt->count() > 0) {
    flags.base.noise = parse_noise(flags.noise_text);
  }
  if (flags.penalty_opt->count() > 0) {
    flags.base.penalty_rho = flags.penalty;
  }
  if (flags.optimum_opt->count() > 0) {
    flags.base.optimum_override = flags.optimum;
  }
}

std::string instance_id_from_path(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  return out;
}

int run_generate(int elements, int partitions, std::uint64_t seed,
                 const std::string& out_path, bool solve_oracle) {
  qcevo::Instance instance = qcevo::generate_instance(elements, partitions, seed);
  if (solve_oracle) {
    const qcevo::BruteForceResult exact =
        qcevo::brute_force(qcevo::build_qubo(instance));
    if (!exact.best_feasible) {
      throw std::runtime_error("generated instance has no feasible selection");
    }
    instance.known_optimum = exact.best_feasible->second;
    std::cout << "oracle optimum: " << qcevo::format_double(*instance.known_optimum)
              << '\n';
  }
  qcevo::save_instance_file(instance, out_path);
  std::cout << "wrote " << out_path << " (" << instance.num_elements << " elements, "
            << instance.partitions.size() << " partitions)\n";
  return 0;
}

int run_solve(const std::string& instance_path, const std::string& solver_text,
              const std::string& out_prefix, RunFlags& flags) {
  finalize_run_flags(flags);
  const auto solver = qcevo::solver_from_name(solver_text);
  if (!solver) {
    throw std::runtime_error("unknown solver '" + solver_text + "'");
  }
  flags.base.solver = *solver;

  const qcevo::Instance instance = qcevo::load_instance_file(instance_path);
  const std::string id = instance_id_from_path(instance_path);
  const qcevo::SolveOutcome outcome = qcevo::run_solver(instance, id, flags.base);
  const qcevo::RunResult& run = outcome.result;

  std::cout << "instance=" << id << " solver=" << qcevo::solver_name(run.solver)
            << " seed=" << run.seed << " oracle_optimum="
            << qcevo::format_double(outcome.oracle_optimum)
            << " ratio=" << qcevo::format_double(run.ratio) << " best_cost="
            << (run.best_cost ? qcevo::format_double(*run.best_cost) : "none")
            << " generations_or_evals=" << run.generations_or_evals
            << " final_depth=" << run.final_depth
            << " seconds=" << qcevo::format_double(run.wall_seconds) << '\n';

  if (!out_prefix.empty()) {
    {
      std::ofstream out = open_output(out_prefix + ".run.csv");
      qcevo::write_detail_csv(out, {run});
    }
    if (run.solver == qcevo::SolverKind::QAOA) {
      std::ofstream out = open_output(out_prefix + ".evals.csv");
      qcevo::write_eval_csv(out, flags.base.layers, outcome.eval_logs);
    } else {
      std::ofstream out = open_output(out_prefix + ".gens.csv");
      qcevo::write_generation_csv(out, outcome.generation_logs);
    }
  }
  return 0;
}

int run_bench(const std::vector<std::string>& instance_paths,
              const std::vector<std::string>& solver_texts, int repetitions, int jobs,
              const std::string& out_prefix, bool export_generations, RunFlags& flags) {
  finalize_run_flags(flags);
  qcevo::BenchOptions options;
  options.base = flags.base;
  options.repetitions = repetitions;
  options.jobs = jobs;
  options.solvers.clear();
  for (const std::string& text : solver_texts) {
    const auto solver = qcevo::solver_from_name(text);
    if (!solver) {
      throw std::runtime_error("unknown solver '" + text + "'");
    }
    options.solvers.push_back(*solver);
  }

  std::vector<std::pair<std::string, qcevo::Instance>> instances;
  instances.reserve(instance_paths.size());
  for (const std::string& path : instance_paths) {
    instances.emplace_back(instance_id_from_path(path),
                           qcevo::load_instance_file(path));
  }

  const qcevo::BenchReport report = qcevo::bench(instances, options);

  if (!out_prefix.empty()) {
    {
      std::ofstream out = open_output(out_prefix + ".detail.csv");
      qcevo::write_detail_csv(out, report.detail);
    }
    {
      std::ofstream out = open_output(out_prefix + ".summary.csv");
      qcevo::write_summary_csv(out, report.summary);
    }
    if (export_generations) {
      std::ofstream out = open_output(out_prefix + ".gens.csv");
      out << "instance,solver,seed,generation,parent_cost,branch,depth,length,"
             "best_feasible_cost,cumulative_seconds\n";
      for (std::size_t i = 0; i < report.detail.size(); ++i) {
        const qcevo::RunResult& run = report.detail[i];
        for (const qcevo::GenerationLog& log : report.generation_logs[i]) {
          out << run.instance_id << ',' << qcevo::solver_name(run.solver) << ','
              << run.seed << ',' << log.generation << ','
              << qcevo::format_double(log.parent_cost) << ','
              << qcevo::branch_name(log.branch) << ',' << log.parent_depth << ','
              << log.parent_length << ',';
          if (log.best_feasible_so_far) {
            out << qcevo::format_double(log.best_feasible_so_far->second);
          }
          out << ',' << qcevo::format_double(log.cumulative_seconds) << '\n';
        }
      }
    }
  }

  std::cout << qcevo::render_report({report.summary});

  for (const qcevo::RunResult& run : report.detail) {
    if (!run.error.empty()) {
      std::cerr << "error: " << run.instance_id << '/'
                << qcevo::solver_name(run.solver) << " seed " << run.seed << ": "
                << run.error << '\n';
      return 1;
    }
  }
  return 0;
}

int run_report(const std::vector<std::string>& summary_paths) {
  std::vector<std::vector<qcevo::BenchSummaryRow>> summaries;
  for (const std::string& path : summary_paths) {
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error("cannot read '" + path + "'");
    }
    summaries.push_back(qcevo::read_summary_csv(in));
  }
  std::cout << qcevo::render_report(summaries);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary and QAOA solvers for QUBO-encoded set partitioning"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Generate a solvable instance");
  int gen_elements = 0;
  int gen_partitions = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  bool gen_oracle = false;
  generate->add_option("--elements", gen_elements, "Number of elements to cover")
      ->required();
  generate->add_option("--partitions", gen_partitions, "Number of partitions")
      ->required();
  generate->add_option("--seed", gen_seed, "Generator seed");
  generate->add_option("--out", gen_out, "Output instance file")->required();
  generate->add_flag("--solve-oracle", gen_oracle,
                     "Print the brute-force optimum and embed it in the file");

  auto* solve = app.add_subcommand("solve", "Run one solver on one instance");
  std::string solve_solver;
  std::string solve_instance;
  std::string solve_out;
  RunFlags solve_flags;
  solve->add_option("--solver", solve_solver, "qce-acf | qce-dcf | qaoa")->required();
  solve->add_option("--instance", solve_instance, "Instance file")->required();
  solve->add_option("--out", solve_out, "Prefix for .run.csv and .gens/.evals.csv");
  add_run_flags(solve, solve_flags);

  auto* bench = app.add_subcommand("bench", "Repeated runs over an instance suite");
  std::vector<std::string> bench_instances;
  std::vector<std::string> bench_solvers = {"qce-acf", "qaoa"};
  int bench_repetitions = 7;
  int bench_jobs = 1;
  std::string bench_out;
  bool bench_export_generations = false;
  RunFlags bench_flags;
  bench->add_option("--instance", bench_instances, "Instance file (repeatable)")
      ->required();
  bench->add_option("--solver", bench_solvers, "Solvers to compare (repeatable)");
  bench->add_option("--repetitions", bench_repetitions, "Runs per (instance, solver)");
  bench->add_option("--jobs", bench_jobs, "Parallel worker threads");
  bench->add_option("--out", bench_out, "Prefix for .detail.csv and .summary.csv");
  bench->add_flag("--export-generations", bench_export_generations,
                  "Also write per-generation logs to <out>.gens.csv");
  add_run_flags(bench, bench_flags);

  auto* report = app.add_subcommand("report", "Merge and print summary CSVs");
  std::vector<std::string> report_paths;
  report->add_option("summaries", report_paths, "Summary CSV files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (generate->parsed()) {
      return run_generate(gen_elements, gen_partitions, gen_seed, gen_out, gen_oracle);
    }
    if (solve->parsed()) {
      return run_solve(solve_instance, solve_solver, solve_out, solve_flags);
    }
    if (bench->parsed()) {
      return run_bench(bench_instances, bench_solvers, bench_repetitions, bench_jobs,
                       bench_out, bench_export_generations, bench_flags);
    }
    if (report->parsed()) {
      return run_report(report_paths);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
