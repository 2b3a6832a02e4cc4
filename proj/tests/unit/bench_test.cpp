#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcevo/bench.hpp"
#include "test_util.hpp"

namespace {

using qcevo::BenchOptions;
using qcevo::BenchReport;
using qcevo::Instance;
using qcevo::RunResult;
using qcevo::SolveOptions;
using qcevo::SolverKind;

SolveOptions quick_base() {
  SolveOptions base;
  base.shots = 256;
  base.max_generations = 500;
  base.stall_window = 500;
  base.max_evals = 60;
  base.restarts = 2;
  return base;
}

std::vector<std::pair<std::string, Instance>> two_instances() {
  return {{"t1", testutil::t1_instance()},
          {"g5", qcevo::generate_instance(3, 6, 5)}};
}

// Strips the wall_seconds column (index 7 of 9) from every row so CSV
// comparisons see only the deterministic fields.
std::string strip_wall_seconds(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) {
    std::string kept;
    int column = 0;
    std::size_t begin = 0;
    while (begin <= line.size()) {
      std::size_t end = line.find(',', begin);
      if (end == std::string::npos) {
        end = line.size();
      }
      if (column != 7) {
        if (!kept.empty()) {
          kept += ',';
        }
        kept.append(line, begin, end - begin);
      }
      begin = end + 1;
      ++column;
    }
    out += kept;
    out += '\n';
  }
  return out;
}

TEST(Bench, SolverNamesRoundTrip) {
  for (SolverKind kind : {SolverKind::QCE_ACF, SolverKind::QCE_DCF, SolverKind::QAOA}) {
    const auto parsed = qcevo::solver_from_name(qcevo::solver_name(kind));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, kind);
  }
  EXPECT_EQ(qcevo::solver_name(SolverKind::QCE_ACF), "qce-acf");
  EXPECT_EQ(qcevo::solver_name(SolverKind::QCE_DCF), "qce-dcf");
  EXPECT_EQ(qcevo::solver_name(SolverKind::QAOA), "qaoa");
  EXPECT_FALSE(qcevo::solver_from_name("annealer").has_value());
}

TEST(Bench, RunSolverReachesTheReferenceOptimum) {
  SolveOptions options = quick_base();
  options.solver = SolverKind::QCE_ACF;
  options.seed = 3;
  options.max_generations = 2000;
  options.stall_window = 2000;
  const qcevo::SolveOutcome outcome = run_solver(testutil::t1_instance(), "t1", options);
  EXPECT_TRUE(outcome.result.error.empty());
  EXPECT_DOUBLE_EQ(outcome.oracle_optimum, 4.0);
  EXPECT_DOUBLE_EQ(outcome.result.ratio, 1.0);
  ASSERT_TRUE(outcome.result.best_cost.has_value());
  EXPECT_DOUBLE_EQ(*outcome.result.best_cost, 4.0);
  EXPECT_GT(outcome.result.generations_or_evals, 0);
  EXPECT_EQ(outcome.generation_logs.size(),
            static_cast<std::size_t>(outcome.result.generations_or_evals));
  EXPECT_GE(outcome.result.final_depth, 1);
  EXPECT_TRUE(outcome.eval_logs.empty());
}

TEST(Bench, RunSolverQaoaFillsEvalLogs) {
  SolveOptions options = quick_base();
  options.solver = SolverKind::QAOA;
  options.seed = 1;
  const qcevo::SolveOutcome outcome = run_solver(testutil::t1_instance(), "t1", options);
  EXPECT_TRUE(outcome.result.error.empty());
  EXPECT_GT(outcome.result.generations_or_evals, 0);
  EXPECT_EQ(outcome.eval_logs.size(),
            static_cast<std::size_t>(outcome.result.generations_or_evals));
  EXPECT_TRUE(outcome.generation_logs.empty());
  // Depth of the rebuilt best ansatz, never zero for a 1-layer circuit.
  EXPECT_GE(outcome.result.final_depth, 1);
}

TEST(Bench, RunSolverUsesTheOptimumOverride) {
  SolveOptions options = quick_base();
  options.solver = SolverKind::QCE_ACF;
  options.max_generations = 2000;
  options.stall_window = 2000;
  // An override of 2.0 makes the true optimum (4.0) look like ratio 0.5.
  options.optimum_override = 2.0;
  const qcevo::SolveOutcome outcome = run_solver(testutil::t1_instance(), "t1", options);
  EXPECT_DOUBLE_EQ(outcome.oracle_optimum, 2.0);
  if (outcome.result.best_cost && *outcome.result.best_cost == 4.0) {
    EXPECT_DOUBLE_EQ(outcome.result.ratio, 0.5);
  }
}

TEST(Bench, RunSolverRejectsInfeasibleInstances) {
  Instance uncoverable;
  uncoverable.num_elements = 2;
  uncoverable.partitions = {{1.0, {0}}, {2.0, {0}}};
  SolveOptions options = quick_base();
  EXPECT_THROW(run_solver(uncoverable, "bad", options), std::runtime_error);
}

TEST(Bench, DetailRowsFollowInstanceSolverRepetitionOrder) {
  BenchOptions options;
  options.base = quick_base();
  options.solvers = {SolverKind::QCE_ACF, SolverKind::QAOA};
  options.repetitions = 2;
  options.base.seed = 10;
  const BenchReport report = bench(two_instances(), options);
  ASSERT_EQ(report.detail.size(), 8u);
  ASSERT_EQ(report.generation_logs.size(), 8u);
  const char* expected[][2] = {{"t1", "qce-acf"}, {"t1", "qce-acf"}, {"t1", "qaoa"},
                               {"t1", "qaoa"},    {"g5", "qce-acf"}, {"g5", "qce-acf"},
                               {"g5", "qaoa"},    {"g5", "qaoa"}};
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(report.detail[i].instance_id, expected[i][0]) << "row " << i;
    EXPECT_EQ(qcevo::solver_name(report.detail[i].solver), expected[i][1]) << "row " << i;
    EXPECT_EQ(report.detail[i].seed, 10u + (i % 2));
  }
  // Summary aggregates each (instance, solver) block.
  ASSERT_EQ(report.summary.size(), 4u);
  for (const auto& row : report.summary) {
    EXPECT_EQ(row.runs, 2);
    EXPECT_GE(row.min_ratio, 0.0);
    EXPECT_LE(row.max_ratio, 1.0);
    EXPECT_GE(row.mean_ratio, row.min_ratio);
    EXPECT_LE(row.mean_ratio, row.max_ratio);
  }
}

TEST(Bench, ParallelExecutionMatchesSerialModuloTiming) {
  BenchOptions serial;
  serial.base = quick_base();
  serial.repetitions = 2;
  serial.jobs = 1;
  BenchOptions parallel = serial;
  parallel.jobs = 4;

  const BenchReport a = bench(two_instances(), serial);
  const BenchReport b = bench(two_instances(), parallel);

  std::ostringstream csv_a, csv_b;
  qcevo::write_detail_csv(csv_a, a.detail);
  qcevo::write_detail_csv(csv_b, b.detail);
  EXPECT_EQ(strip_wall_seconds(csv_a.str()), strip_wall_seconds(csv_b.str()));
}

TEST(Bench, RepeatedRunsAreByteIdenticalModuloTiming) {
  BenchOptions options;
  options.base = quick_base();
  options.repetitions = 2;
  const BenchReport a = bench(two_instances(), options);
  const BenchReport b = bench(two_instances(), options);
  std::ostringstream csv_a, csv_b;
  qcevo::write_detail_csv(csv_a, a.detail);
  qcevo::write_detail_csv(csv_b, b.detail);
  EXPECT_EQ(strip_wall_seconds(csv_a.str()), strip_wall_seconds(csv_b.str()));
}

TEST(Bench, DetailCsvSchemaIsStable) {
  RunResult row;
  row.solver = SolverKind::QAOA;
  row.instance_id = "t1";
  row.seed = 4;
  row.ratio = 1.0;
  row.best_cost = 4.0;
  row.generations_or_evals = 17;
  row.final_depth = 5;
  row.wall_seconds = 0.25;
  std::ostringstream out;
  qcevo::write_detail_csv(out, {row});
  EXPECT_EQ(out.str(),
            "instance,solver,seed,ratio,best_cost,generations_or_evals,final_depth,"
            "wall_seconds,error\n"
            "t1,qaoa,4,1,4,17,5,0.25,\n");
}

TEST(Bench, SummaryCsvRoundTrips) {
  BenchOptions options;
  options.base = quick_base();
  options.repetitions = 2;
  const BenchReport report = bench(two_instances(), options);
  std::ostringstream out;
  qcevo::write_summary_csv(out, report.summary);
  std::istringstream in(out.str());
  const std::vector<qcevo::BenchSummaryRow> reread = qcevo::read_summary_csv(in);
  ASSERT_EQ(reread.size(), report.summary.size());
  for (std::size_t i = 0; i < reread.size(); ++i) {
    EXPECT_EQ(reread[i].instance_id, report.summary[i].instance_id);
    EXPECT_EQ(reread[i].solver, report.summary[i].solver);
    EXPECT_DOUBLE_EQ(reread[i].mean_ratio, report.summary[i].mean_ratio);
    EXPECT_DOUBLE_EQ(reread[i].min_ratio, report.summary[i].min_ratio);
    EXPECT_DOUBLE_EQ(reread[i].max_ratio, report.summary[i].max_ratio);
    EXPECT_DOUBLE_EQ(reread[i].mean_seconds, report.summary[i].mean_seconds);
    EXPECT_EQ(reread[i].runs, report.summary[i].runs);
  }
}

TEST(Bench, ReadSummaryRejectsForeignCsv) {
  std::istringstream in("a,b,c\n1,2,3\n");
  EXPECT_THROW(qcevo::read_summary_csv(in), std::invalid_argument);
}

TEST(Bench, FormatDoubleUsesShortestRoundTrip) {
  EXPECT_EQ(qcevo::format_double(1.0), "1");
  EXPECT_EQ(qcevo::format_double(0.5), "0.5");
  EXPECT_EQ(qcevo::format_double(4.4), "4.4");
  const double awkward = 70.0 / 8.0;
  EXPECT_EQ(std::stod(qcevo::format_double(awkward)), awkward);
}

TEST(Bench, ErrorRowsAreExcludedFromAggregation) {
  Instance uncoverable;
  uncoverable.num_elements = 2;
  uncoverable.partitions = {{1.0, {0}}, {2.0, {0}}};
  BenchOptions options;
  options.base = quick_base();
  options.solvers = {SolverKind::QCE_ACF};
  options.repetitions = 2;
  const BenchReport report = bench({{"bad", uncoverable}, {"t1", testutil::t1_instance()}}, options);
  ASSERT_EQ(report.detail.size(), 4u);
  EXPECT_FALSE(report.detail[0].error.empty());
  EXPECT_FALSE(report.detail[1].error.empty());
  ASSERT_EQ(report.summary.size(), 2u);
  EXPECT_EQ(report.summary[0].instance_id, "bad");
  EXPECT_EQ(report.summary[0].runs, 0);
  EXPECT_EQ(report.summary[1].runs, 2);
}

TEST(Bench, RenderReportMergesAndWarnsOnCoverageGaps) {
  qcevo::BenchSummaryRow acf;
  acf.instance_id = "alpha";
  acf.solver = "qce-acf";
  acf.mean_ratio = 1.0;
  acf.min_ratio = 1.0;
  acf.max_ratio = 1.0;
  acf.mean_seconds = 0.125;
  acf.runs = 7;
  qcevo::BenchSummaryRow qaoa = acf;
  qaoa.solver = "qaoa";
  qaoa.mean_seconds = 0.5;
  qcevo::BenchSummaryRow stray = acf;
  stray.instance_id = "beta";

  const std::string merged = qcevo::render_report({{acf}, {qaoa}});
  EXPECT_NE(merged.find("alpha"), std::string::npos);
  EXPECT_NE(merged.find("qce-acf"), std::string::npos);
  EXPECT_NE(merged.find("time qce-acf/qaoa on alpha: 0.250"), std::string::npos);
  EXPECT_EQ(merged.find("warning"), std::string::npos);

  const std::string gappy = qcevo::render_report({{acf}, {qaoa, stray}});
  EXPECT_NE(gappy.find("warning"), std::string::npos);
  EXPECT_NE(gappy.find("beta"), std::string::npos);
}

}  // namespace
