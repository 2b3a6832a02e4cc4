#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcevo/evolve.hpp"
#include "qcevo/instance.hpp"
#include "qcevo/qaoa.hpp"

namespace qcevo {

enum class SolverKind { QCE_ACF, QCE_DCF, QAOA };

std::string_view solver_name(SolverKind kind);
std::optional<SolverKind> solver_from_name(std::string_view name);

// Per-run knobs shared by every solver; solver-specific fields are ignored by
// the solvers that do not use them.
struct SolveOptions {
  SolverKind solver = SolverKind::QCE_ACF;
  std::uint64_t shots = 1024;
  std::uint64_t seed = 0;
  int max_generations = 5000;
  int stall_window = 500;
  int offspring = 4;
  bool elitist = true;
  int layers = 1;
  int max_evals = 500;
  int restarts = 5;
  std::optional<NoiseModel> noise;
  std::optional<double> penalty_rho;     // uniform penalty override
  std::optional<double> optimum_override;  // skip the brute-force oracle
};

struct RunResult {
  SolverKind solver = SolverKind::QCE_ACF;
  std::string instance_id;
  std::uint64_t seed = 0;
  double ratio = 0.0;
  std::optional<double> best_cost;
  int generations_or_evals = 0;
  int final_depth = 0;
  double wall_seconds = 0.0;
  std::string error;  // empty on success
};

struct SolveOutcome {
  RunResult result;
  std::vector<GenerationLog> generation_logs;  // evolutionary solvers
  std::vector<QaoaEvalLog> eval_logs;          // QAOA
  double oracle_optimum = 0.0;
};

// Builds the QUBO, resolves the oracle optimum (override or brute force,
// outside the timed window), dispatches the solver, and times the solver
// call only.
SolveOutcome run_solver(const Instance& instance, const std::string& instance_id,
                        const SolveOptions& options);

struct BenchOptions {
  std::vector<SolverKind> solvers = {SolverKind::QCE_ACF, SolverKind::QAOA};
  int repetitions = 7;
  int jobs = 1;
  // Template for every run; seed is the first repetition's seed, repetition r
  // runs with seed + r.
  SolveOptions base;
};

struct BenchSummaryRow {
  std::string instance_id;
  std::string solver;
  double mean_ratio = 0.0;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_seconds = 0.0;
  int runs = 0;  // completed (non-error) runs aggregated
};

struct BenchReport {
  // One entry per (instance, solver, repetition) in that nesting order,
  // regardless of how many worker threads executed them.
  std::vector<RunResult> detail;
  std::vector<BenchSummaryRow> summary;
  // Parallel to detail; empty for QAOA and failed runs.
  std::vector<std::vector<GenerationLog>> generation_logs;
};

BenchReport bench(const std::vector<std::pair<std::string, Instance>>& instances,
                  const BenchOptions& options);

// Shortest round-trip decimal rendering, used by every CSV writer.
std::string format_double(double value);

void write_detail_csv(std::ostream& out, const std::vector<RunResult>& rows);
void write_summary_csv(std::ostream& out, const std::vector<BenchSummaryRow>& rows);
std::vector<BenchSummaryRow> read_summary_csv(std::istream& in);
void write_generation_csv(std::ostream& out, const std::vector<GenerationLog>& logs);
void write_eval_csv(std::ostream& out, int layers, const std::vector<QaoaEvalLog>& logs);

// Merged, aligned comparison of one or more summaries, with per-instance
// QCE-ACF : QAOA mean-time ratios and a warning when the summaries do not
// cover the same instances.
std::string render_report(const std::vector<std::vector<BenchSummaryRow>>& summaries);

}  // namespace qcevo
