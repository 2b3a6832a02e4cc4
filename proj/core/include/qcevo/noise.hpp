#pragma once

#include <cstdint>

#include "qcevo/circuit.hpp"
#include "qcevo/statevector.hpp"

namespace qcevo {

// Stochastic noise channel: after every two-qubit gate, with probability p one
// of the 15 non-identity two-qubit Paulis (uniformly chosen) hits that gate's
// qubits; after measurement each readout bit flips independently with
// probability q.
struct NoiseModel {
  // Default strengths for a noisy run; pass 0 for either to switch the
  // corresponding channel off.
  double two_qubit_depolarizing_p = 0.01;
  double readout_flip_q = 0.02;

  void validate() const;
  bool is_zero() const {
    return two_qubit_depolarizing_p == 0.0 && readout_flip_q == 0.0;
  }
};

// Monte Carlo trajectory sampling of the noisy circuit. Each shot draws its
// own error pattern from a counter-derived stream; shots sharing a pattern
// share one statevector simulation. With p = q = 0 this consumes streams
// exactly like sample(run_circuit(genome), ...), so the two paths produce
// identical records for the same seed.
MeasurementRecord sample_noisy(const CircuitGenome& genome, std::uint64_t shots,
                               const NoiseModel& noise, std::uint64_t rng_seed);

}  // namespace qcevo
