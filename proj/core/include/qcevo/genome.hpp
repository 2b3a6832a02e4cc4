#pragma once

#include <cstdint>
#include <vector>

#include "qcevo/circuit.hpp"
#include "qcevo/rng.hpp"

namespace qcevo {

// Weights and parameters of the four structural mutations. The probabilities
// must be non-negative and sum to 1.
struct MutationConfig {
  double insert_prob = 0.25;
  double delete_prob = 0.25;
  double swap_prob = 0.25;
  double modify_prob = 0.25;
  // Std deviation of the additive angle perturbation, radians.
  double modify_sigma = 0.1 * 6.283185307179586476925287;
  // Alternative reading of "swap": replace one gate with a fresh random gate
  // instead of exchanging the positions of two existing gates.
  bool swap_replaces_gate = false;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

// Uniform random gate: kind uniform over the nine kinds, qubits uniform over
// valid distinct tuples, theta uniform in [0, 2*pi).
Gate random_gate(int num_qubits, RngStream& stream);

// Single-gate starting genome. Requires num_qubits >= 2 so that two-qubit
// kinds are placeable.
CircuitGenome random_initial(int num_qubits, std::uint64_t rng_seed);

// Applies exactly one mutation (insert / delete / swap / modify) drawn from
// the configured probabilities. A delete drawn on a length-1 parent is
// re-drawn among the other three so the genome never becomes empty. The
// parent is left untouched.
CircuitGenome mutate(const CircuitGenome& parent, const MutationConfig& config,
                     RngStream& stream);

// `count` independent mutations of the parent, each from its own stream
// derived from (rng_seed, generation, offspring index); the result does not
// depend on evaluation order.
std::vector<CircuitGenome> spawn_offspring(const CircuitGenome& parent, int count,
                                           const MutationConfig& config,
                                           std::uint64_t generation);

}  // namespace qcevo
