#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcevo/circuit.hpp"
#include "qcevo/cost.hpp"
#include "qcevo/noise.hpp"
#include "qcevo/qubo.hpp"

namespace qcevo {

struct QaoaParams {
  std::vector<double> gammas;
  std::vector<double> betas;

  void validate() const;  // equal lengths, at least one layer
};

struct QaoaConfig {
  int layers = 1;
  std::uint64_t shots = 1024;
  int max_evals = 500;
  int restarts = 5;
  std::uint64_t rng_seed = 0;
  std::optional<NoiseModel> noise;

  void validate() const;
};

struct QaoaEvalLog {
  int eval_index = 0;
  std::vector<double> gammas;
  std::vector<double> betas;
  double objective = 0.0;
  std::optional<std::pair<Bitstring, double>> best_feasible_so_far;
  // Wall time since the optimization started; the only non-deterministic field.
  double cumulative_seconds = 0.0;
};

struct QaoaResult {
  QaoaParams best_params;
  double best_objective = 0.0;
  std::optional<std::pair<Bitstring, double>> best_feasible;
  int evals_used = 0;
  std::vector<QaoaEvalLog> logs;
};

// Uniform superposition via RY(pi/2) on every qubit, then per layer: the
// phase separator exp(-i gamma H) as RZ(2 gamma h_i) on each qubit with
// h_i != 0 plus RZZ(2 gamma J_pq) per coupling, then the mixer RX(2 beta) on
// every qubit.
CircuitGenome build_ansatz(const IsingHamiltonian& ham, const QaoaParams& params);

// Full shot average of the model cost over one measurement record of the
// ansatz, with the record's best feasible string tracked.
CostReport qaoa_objective(const IsingHamiltonian& ham, const QuboModel& model,
                          const QaoaParams& params, const QaoaConfig& config,
                          std::uint64_t measure_seed);

// Derivative-free simplex descent over the 2p angles with `restarts`
// independent uniform starts; the evaluation budget is split across restarts.
// Every evaluation draws a fresh record; the best feasible string across all
// evaluations is returned. Deterministic for a fixed config.rng_seed.
QaoaResult qaoa_optimize(const IsingHamiltonian& ham, const QuboModel& model,
                         const QaoaConfig& config);

}  // namespace qcevo
