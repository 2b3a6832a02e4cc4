#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcevo/cost.hpp"
#include "qcevo/genome.hpp"
#include "qcevo/noise.hpp"
#include "qcevo/qubo.hpp"

namespace qcevo {

struct EvolutionConfig {
  std::uint64_t shots = 1024;
  int offspring = 4;
  int max_generations = 5000;
  int stall_window = 500;
  MutationConfig mutation;
  CostKind cost_kind = CostKind::ACF;
  std::optional<NoiseModel> noise;
  // Keep the parent in the selection pool. The literal comma strategy
  // (offspring only) is elitist = false.
  bool elitist = true;
  // Stop as soon as a feasible string at or below this cost has been measured.
  std::optional<double> target_cost;
  // Ablation: compare adaptive cost values numerically across branches
  // instead of preferring feasible-average candidates outright.
  bool acf_raw_value_selection = false;

  void validate() const;
};

struct GenerationLog {
  int generation = 0;
  double parent_cost = 0.0;
  CostBranch branch = CostBranch::EXACT;
  int parent_depth = 0;
  int parent_length = 0;
  std::optional<std::pair<Bitstring, double>> best_feasible_so_far;
  // Wall time since the run started; the only non-deterministic field.
  double cumulative_seconds = 0.0;
};

struct EvolveResult {
  CircuitGenome final_genome;
  std::vector<GenerationLog> logs;
  std::optional<std::pair<Bitstring, double>> best_feasible;
  int generations_used = 0;
};

// Picks the next parent from the evaluated pool: lowest value wins, ties go
// to the lowest index. With prefer_feasible_branch, any FEASIBLE_ONLY-branch
// candidate outranks every candidate on another branch.
std::size_t select_candidate(const std::vector<CostReport>& reports,
                             bool prefer_feasible_branch);

// (1 + offspring) evolutionary search over circuit genomes. Sampled cost
// kinds draw one fresh measurement record per candidate per generation.
// Deterministic for a fixed (model, config, run_seed); evaluation order never
// affects the result.
EvolveResult evolve(const QuboModel& model, const EvolutionConfig& config,
                    std::uint64_t run_seed);

// Oracle-relative efficiency in [0, 1]: optimum / achieved cost, or 0 when no
// feasible string was found. Requires a positive oracle optimum.
double ratio(const std::optional<std::pair<Bitstring, double>>& best_feasible,
             double oracle_optimum);

}  // namespace qcevo
