#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "qcevo/bitstring.hpp"
#include "qcevo/circuit.hpp"
#include "qcevo/qubo.hpp"
#include "qcevo/statevector.hpp"

namespace qcevo {

enum class CostKind { DCF_EXACT, DCF_SAMPLED, ACF };

// Which rule produced a cost value:
//   EXACT                 expectation of the diagonal Hamiltonian
//   FULL_AVERAGE          plain shot average over every measured string
//   FEASIBLE_ONLY         average over feasible strings only
//   VIOLATIONS_MINUS_MODE all strings infeasible; the most frequent one is
//                         dropped before averaging
enum class CostBranch { EXACT, FULL_AVERAGE, FEASIBLE_ONLY, VIOLATIONS_MINUS_MODE };

std::string_view branch_name(CostBranch branch);

struct CostReport {
  double value = 0.0;
  CostBranch branch = CostBranch::EXACT;
  std::uint64_t feasible_shots = 0;
  std::uint64_t violation_shots = 0;
  // Lowest-cost feasible string in the record, when any was measured.
  std::optional<std::pair<Bitstring, double>> best_feasible_seen;
};

// <0|U' H U|0> computed from the exact statevector; no sampling involved.
CostReport cost_dcf_exact(const CircuitGenome& genome, const IsingHamiltonian& ham);

// Shot average of C over the whole record.
CostReport cost_dcf_sampled(const MeasurementRecord& record, const QuboModel& model);

// Adaptive cost: averages feasible strings when any were measured; otherwise
// drops the most frequent violating string (ties toward the lexicographically
// smallest) and averages the rest; a record holding a single distinct
// violating string falls back to the full average.
CostReport cost_acf(const MeasurementRecord& record, const QuboModel& model);

}  // namespace qcevo
