#include "qcevo/cost.hpp"

#include <stdexcept>

namespace qcevo {

namespace {

void check_record(const MeasurementRecord& record, const QuboModel& model) {
  if (record.total_shots < 1 || record.counts.empty()) {
    throw std::invalid_argument("cost: measurement record is empty");
  }
  if (record.num_bits != model.num_vars) {
    throw std::invalid_argument("cost: record width does not match model");
  }
}

}  // namespace

std::string_view branch_name(CostBranch branch) {
  switch (branch) {
    case CostBranch::EXACT:
      return "EXACT";
    case CostBranch::FULL_AVERAGE:
      return "FULL_AVERAGE";
    case CostBranch::FEASIBLE_ONLY:
      return "FEASIBLE_ONLY";
    case CostBranch::VIOLATIONS_MINUS_MODE:
      return "VIOLATIONS_MINUS_MODE";
  }
  return "UNKNOWN";
}

CostReport cost_dcf_exact(const CircuitGenome& genome, const IsingHamiltonian& ham) {
  if (genome.num_qubits != ham.num_qubits) {
    throw std::invalid_argument("cost_dcf_exact: qubit count mismatch");
  }
  CostReport report;
  report.value = exact_expectation(run_circuit(genome), ham);
  report.branch = CostBranch::EXACT;
  return report;
}

CostReport cost_dcf_sampled(const MeasurementRecord& record, const QuboModel& model) {
  check_record(record, model);
  CostReport report;
  report.branch = CostBranch::FULL_AVERAGE;
  double sum = 0.0;
  for (const auto& [index, count] : record.counts) {
    const double cost = qubo_cost(model, index);
    sum += static_cast<double>(count) * cost;
    if (is_feasible(model, index)) {
      report.feasible_shots += count;
      // Ascending-index iteration keeps cost ties on the smaller string.
      if (!report.best_feasible_seen || cost < report.best_feasible_seen->second) {
        report.best_feasible_seen = {Bitstring::from_index(index, model.num_vars), cost};
      }
    } else {
      report.violation_shots += count;
    }
  }
  report.value = sum / static_cast<double>(record.total_shots);
  return report;
}

CostReport cost_acf(const MeasurementRecord& record, const QuboModel& model) {
  check_record(record, model);
  CostReport report;
  double feasible_sum = 0.0;
  double violating_sum = 0.0;
  std::uint64_t mode_count = 0;
  double mode_cost = 0.0;
  for (const auto& [index, count] : record.counts) {
    const double cost = qubo_cost(model, index);
    if (is_feasible(model, index)) {
      report.feasible_shots += count;
      feasible_sum += static_cast<double>(count) * cost;
      if (!report.best_feasible_seen || cost < report.best_feasible_seen->second) {
        report.best_feasible_seen = {Bitstring::from_index(index, model.num_vars), cost};
      }
    } else {
      report.violation_shots += count;
      violating_sum += static_cast<double>(count) * cost;
      if (count > mode_count) {  // strict: ties keep the lex-smaller string
        mode_count = count;
        mode_cost = cost;
      }
    }
  }

  if (report.feasible_shots > 0) {
    report.branch = CostBranch::FEASIBLE_ONLY;
    report.value = feasible_sum /
                   static_cast<double>(record.total_shots - report.violation_shots);
  } else if (record.counts.size() >= 2) {
    report.branch = CostBranch::VIOLATIONS_MINUS_MODE;
    report.value =
        (violating_sum - static_cast<double>(mode_count) * mode_cost) /
        static_cast<double>(record.total_shots - mode_count);
  } else {
    // Single distinct violating string: not enough structure to discard.
    report.branch = CostBranch::FULL_AVERAGE;
    report.value = violating_sum / static_cast<double>(record.total_shots);
  }
  return report;
}

}  // namespace qcevo
