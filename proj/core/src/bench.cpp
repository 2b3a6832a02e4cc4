#include "qcevo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "qcevo/qubo.hpp"

namespace qcevo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sanitize_field(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') {
      c = ';';
    }
  }
  return text;
}

std::string format_optional_cost(const std::optional<double>& cost) {
  return cost ? format_double(*cost) : std::string();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double parse_double(const std::string& text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("summary CSV: bad ") + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

std::string_view solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::QCE_ACF:
      return "qce-acf";
    case SolverKind::QCE_DCF:
      return "qce-dcf";
    case SolverKind::QAOA:
      return "qaoa";
  }
  return "unknown";
}

std::optional<SolverKind> solver_from_name(std::string_view name) {
  if (name == "qce-acf") {
    return SolverKind::QCE_ACF;
  }
  if (name == "qce-dcf") {
    return SolverKind::QCE_DCF;
  }
  if (name == "qaoa") {
    return SolverKind::QAOA;
  }
  return std::nullopt;
}

SolveOutcome run_solver(const Instance& instance, const std::string& instance_id,
                        const SolveOptions& options) {
  instance.validate();
  PenaltyPolicy policy;
  policy.uniform_rho = options.penalty_rho;
  const QuboModel model = build_qubo(instance, policy);

  double oracle = 0.0;
  if (options.optimum_override) {
    oracle = *options.optimum_override;
  } else {
    const BruteForceResult exact = brute_force(model);
    if (!exact.best_feasible) {
      throw std::runtime_error("instance has no feasible selection; ratio undefined");
    }
    oracle = exact.best_feasible->second;
  }
  if (!(oracle > 0.0)) {
    throw std::runtime_error("oracle optimum must be positive");
  }

  SolveOutcome outcome;
  outcome.oracle_optimum = oracle;
  outcome.result.solver = options.solver;
  outcome.result.instance_id = instance_id;
  outcome.result.seed = options.seed;

  if (options.solver == SolverKind::QAOA) {
    const IsingHamiltonian ham = to_ising(model);
    QaoaConfig config;
    config.layers = options.layers;
    config.shots = options.shots;
    config.max_evals = options.max_evals;
    config.restarts = options.restarts;
    config.rng_seed = options.seed;
    config.noise = options.noise;

    const auto start = Clock::now();
    QaoaResult qaoa = qaoa_optimize(ham, model, config);
    outcome.result.wall_seconds = seconds_since(start);

    outcome.result.ratio = ratio(qaoa.best_feasible, oracle);
    if (qaoa.best_feasible) {
      outcome.result.best_cost = qaoa.best_feasible->second;
    }
    outcome.result.generations_or_evals = qaoa.evals_used;
    outcome.result.final_depth = depth(build_ansatz(ham, qaoa.best_params));
    outcome.eval_logs = std::move(qaoa.logs);
  } else {
    EvolutionConfig config;
    config.shots = options.shots;
    config.offspring = options.offspring;
    config.max_generations = options.max_generations;
    config.stall_window = options.stall_window;
    config.cost_kind = options.solver == SolverKind::QCE_ACF ? CostKind::ACF
                                                             : CostKind::DCF_SAMPLED;
    config.noise = options.noise;
    config.elitist = options.elitist;
    config.target_cost = oracle;

    const auto start = Clock::now();
    EvolveResult evolved = evolve(model, config, options.seed);
    outcome.result.wall_seconds = seconds_since(start);

    outcome.result.ratio = ratio(evolved.best_feasible, oracle);
    if (evolved.best_feasible) {
      outcome.result.best_cost = evolved.best_feasible->second;
    }
    outcome.result.generations_or_evals = evolved.generations_used;
    outcome.result.final_depth = depth(evolved.final_genome);
    outcome.generation_logs = std::move(evolved.logs);
  }
  return outcome;
}

BenchReport bench(const std::vector<std::pair<std::string, Instance>>& instances,
                  const BenchOptions& options) {
  if (instances.empty() || options.solvers.empty()) {
    throw std::invalid_argument("bench: need at least one instance and one solver");
  }
  if (options.repetitions < 1 || options.jobs < 1) {
    throw std::invalid_argument("bench: repetitions and jobs must be >= 1");
  }

  // Oracle once per instance, shared by every run on it.
  std::vector<std::optional<double>> oracle(instances.size());
  std::vector<std::string> oracle_error(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (options.base.optimum_override) {
      oracle[i] = options.base.optimum_override;
      continue;
    }
    try {
      PenaltyPolicy policy;
      policy.uniform_rho = options.base.penalty_rho;
      const BruteForceResult exact = brute_force(build_qubo(instances[i].second, policy));
      if (!exact.best_feasible) {
        oracle_error[i] = "instance has no feasible selection; ratio undefined";
      } else {
        oracle[i] = exact.best_feasible->second;
      }
    } catch (const std::exception& e) {
      oracle_error[i] = e.what();
    }
  }

  struct Task {
    std::size_t instance_index;
    SolverKind solver;
    int repetition;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (SolverKind solver : options.solvers) {
      for (int rep = 0; rep < options.repetitions; ++rep) {
        tasks.push_back({i, solver, rep});
      }
    }
  }

  BenchReport report;
  report.detail.resize(tasks.size());
  report.generation_logs.resize(tasks.size());

  auto run_task = [&](std::size_t t) {
    const Task& task = tasks[t];
    const std::uint64_t seed = options.base.seed + static_cast<std::uint64_t>(task.repetition);
    RunResult& row = report.detail[t];
    row.solver = task.solver;
    row.instance_id = instances[task.instance_index].first;
    row.seed = seed;
    if (!oracle_error[task.instance_index].empty()) {
      row.error = oracle_error[task.instance_index];
      return;
    }
    SolveOptions run_options = options.base;
    run_options.solver = task.solver;
    run_options.seed = seed;
    run_options.optimum_override = oracle[task.instance_index];
    try {
      SolveOutcome outcome = run_solver(instances[task.instance_index].second,
                                        row.instance_id, run_options);
      row = std::move(outcome.result);
      report.generation_logs[t] = std::move(outcome.generation_logs);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(options.jobs), tasks.size());
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      run_task(t);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size();
             t = next.fetch_add(1)) {
          run_task(t);
        }
      });
    }
    for (std::thread& worker : pool) {
      worker.join();
    }
  }

  // Aggregate blocks of `repetitions` consecutive rows per (instance, solver).
  for (std::size_t block = 0; block < tasks.size();
       block += static_cast<std::size_t>(options.repetitions)) {
    BenchSummaryRow row;
    row.instance_id = report.detail[block].instance_id;
    row.solver = std::string(solver_name(report.detail[block].solver));
    double ratio_sum = 0.0;
    double seconds_sum = 0.0;
    for (int rep = 0; rep < options.repetitions; ++rep) {
      const RunResult& run = report.detail[block + static_cast<std::size_t>(rep)];
      if (!run.error.empty()) {
        continue;
      }
      if (row.runs == 0) {
        row.min_ratio = row.max_ratio = run.ratio;
      } else {
        row.min_ratio = std::min(row.min_ratio, run.ratio);
        row.max_ratio = std::max(row.max_ratio, run.ratio);
      }
      ratio_sum += run.ratio;
      seconds_sum += run.wall_seconds;
      ++row.runs;
    }
    if (row.runs > 0) {
      row.mean_ratio = ratio_sum / row.runs;
      row.mean_seconds = seconds_sum / row.runs;
    }
    report.summary.push_back(std::move(row));
  }
  return report;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

void write_detail_csv(std::ostream& out, const std::vector<RunResult>& rows) {
  out << "instance,solver,seed,ratio,best_cost,generations_or_evals,final_depth,"
         "wall_seconds,error\n";
  for (const RunResult& row : rows) {
    out << sanitize_field(row.instance_id) << ',' << solver_name(row.solver) << ','
        << row.seed << ',' << format_double(row.ratio) << ','
        << format_optional_cost(row.best_cost) << ',' << row.generations_or_evals
        << ',' << row.final_depth << ',' << format_double(row.wall_seconds) << ','
        << sanitize_field(row.error) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<BenchSummaryRow>& rows) {
  out << "instance,solver,mean_ratio,min_ratio,max_ratio,mean_seconds,runs\n";
  for (const BenchSummaryRow& row : rows) {
    out << sanitize_field(row.instance_id) << ',' << row.solver << ','
        << format_double(row.mean_ratio) << ',' << format_double(row.min_ratio) << ','
        << format_double(row.max_ratio) << ',' << format_double(row.mean_seconds)
        << ',' << row.runs << '\n';
  }
}

std::vector<BenchSummaryRow> read_summary_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("summary CSV: empty input");
  }
  if (line == "instance,solver,mean_ratio,min_ratio,max_ratio,mean_seconds,runs\r") {
    line.pop_back();
  }
  if (line != "instance,solver,mean_ratio,min_ratio,max_ratio,mean_seconds,runs") {
    throw std::invalid_argument("summary CSV: unexpected header '" + line + "'");
  }
  std::vector<BenchSummaryRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 7) {
      throw std::invalid_argument("summary CSV: bad row '" + line + "'");
    }
    BenchSummaryRow row;
    row.instance_id = fields[0];
    row.solver = fields[1];
    row.mean_ratio = parse_double(fields[2], "mean_ratio");
    row.min_ratio = parse_double(fields[3], "min_ratio");
    row.max_ratio = parse_double(fields[4], "max_ratio");
    row.mean_seconds = parse_double(fields[5], "mean_seconds");
    row.runs = static_cast<int>(parse_double(fields[6], "runs"));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_generation_csv(std::ostream& out, const std::vector<GenerationLog>& logs) {
  out << "generation,parent_cost,branch,depth,length,best_feasible_cost,"
         "cumulative_seconds\n";
  for (const GenerationLog& log : logs) {
    out << log.generation << ',' << format_double(log.parent_cost) << ','
        << branch_name(log.branch) << ',' << log.parent_depth << ','
        << log.parent_length << ',';
    if (log.best_feasible_so_far) {
      out << format_double(log.best_feasible_so_far->second);
    }
    out << ',' << format_double(log.cumulative_seconds) << '\n';
  }
}

void write_eval_csv(std::ostream& out, int layers, const std::vector<QaoaEvalLog>& logs) {
  out << "eval_index";
  for (int l = 0; l < layers; ++l) {
    out << ",gamma" << l;
  }
  for (int l = 0; l < layers; ++l) {
    out << ",beta" << l;
  }
  out << ",objective,best_feasible_cost,cumulative_seconds\n";
  for (const QaoaEvalLog& log : logs) {
    out << log.eval_index;
    for (double gamma : log.gammas) {
      out << ',' << format_double(gamma);
    }
    for (double beta : log.betas) {
      out << ',' << format_double(beta);
    }
    out << ',' << format_double(log.objective) << ',';
    if (log.best_feasible_so_far) {
      out << format_double(log.best_feasible_so_far->second);
    }
    out << ',' << format_double(log.cumulative_seconds) << '\n';
  }
}

std::string render_report(const std::vector<std::vector<BenchSummaryRow>>& summaries) {
  std::vector<BenchSummaryRow> merged;
  for (const auto& summary : summaries) {
    merged.insert(merged.end(), summary.begin(), summary.end());
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const BenchSummaryRow& a, const BenchSummaryRow& b) {
                     if (a.instance_id != b.instance_id) {
                       return a.instance_id < b.instance_id;
                     }
                     return a.solver < b.solver;
                   });

  std::ostringstream out;
  if (summaries.size() > 1) {
    std::set<std::string> in_union;
    std::map<std::string, std::size_t> coverage;
    for (const auto& summary : summaries) {
      std::set<std::string> ids;
      for (const BenchSummaryRow& row : summary) {
        ids.insert(row.instance_id);
      }
      for (const std::string& id : ids) {
        in_union.insert(id);
        ++coverage[id];
      }
    }
    std::vector<std::string> mismatched;
    for (const std::string& id : in_union) {
      if (coverage[id] != summaries.size()) {
        mismatched.push_back(id);
      }
    }
    if (!mismatched.empty()) {
      out << "warning: instances not covered by every summary:";
      for (const std::string& id : mismatched) {
        out << ' ' << id;
      }
      out << '\n';
    }
  }

  std::size_t instance_width = std::string("instance").size();
  std::size_t solver_width = std::string("solver").size();
  for (const BenchSummaryRow& row : merged) {
    instance_width = std::max(instance_width, row.instance_id.size());
    solver_width = std::max(solver_width, row.solver.size());
  }
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "%-*s  %-*s  %10s  %9s  %9s  %12s  %4s\n",
                static_cast<int>(instance_width), "instance",
                static_cast<int>(solver_width), "solver", "mean_ratio", "min_ratio",
                "max_ratio", "mean_seconds", "runs");
  out << buffer;
  for (const BenchSummaryRow& row : merged) {
    std::snprintf(buffer, sizeof buffer,
                  "%-*s  %-*s  %10.4f  %9.4f  %9.4f  %12.3f  %4d\n",
                  static_cast<int>(instance_width), row.instance_id.c_str(),
                  static_cast<int>(solver_width), row.solver.c_str(), row.mean_ratio,
                  row.min_ratio, row.max_ratio, row.mean_seconds, row.runs);
    out << buffer;
  }

  // QCE-ACF : QAOA mean-time comparison per instance where both are present.
  std::map<std::string, std::pair<std::optional<double>, std::optional<double>>> times;
  for (const BenchSummaryRow& row : merged) {
    if (row.solver == "qce-acf") {
      times[row.instance_id].first = row.mean_seconds;
    } else if (row.solver == "qaoa") {
      times[row.instance_id].second = row.mean_seconds;
    }
  }
  for (const auto& [instance_id, pair] : times) {
    if (pair.first && pair.second && *pair.second > 0.0) {
      std::snprintf(buffer, sizeof buffer,
                    "time qce-acf/qaoa on %s: %.3f\n", instance_id.c_str(),
                    *pair.first / *pair.second);
      out << buffer;
    }
  }
  return out.str();
}

}  // namespace qcevo
