#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcevo/circuit.hpp"
#include "qcevo/qubo.hpp"

namespace qcevo {

// Dense statevector over 2^n amplitudes. Amplitude index k stores qubit 0 in
// its most significant bit, matching the Bitstring packing. Gate application
// is an in-place strided kernel: O(2^n) work, never a materialized unitary.
struct StateVector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static StateVector zero_state(int num_qubits);

  std::uint64_t dim() const { return amplitudes.size(); }
  double norm() const;
  double probability(std::uint64_t basis_index) const;
};

void apply_gate(StateVector& state, const Gate& gate);

// Pauli index: 1 = X, 2 = Y, 3 = Z. Used by the noise channel.
void apply_pauli(StateVector& state, int qubit, int pauli);

StateVector run_circuit(const CircuitGenome& genome);

// <state| H |state> for the diagonal Hamiltonian: sum_k |a_k|^2 E(k).
double exact_expectation(const StateVector& state, const IsingHamiltonian& ham);

// Multiset of measured bitstrings from repeated shots of one circuit.
struct MeasurementRecord {
  int num_bits = 0;
  std::uint64_t total_shots = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // basis index -> shots

  // Debug form: one "bitstring count" line per outcome, index order.
  std::string to_text() const;

  bool operator==(const MeasurementRecord&) const = default;
};

// Draws `shots` i.i.d. samples from |amplitudes|^2. Each shot uses its own
// counter-derived stream, so the record is independent of evaluation order.
MeasurementRecord sample(const StateVector& state, std::uint64_t shots,
                         std::uint64_t rng_seed);

}  // namespace qcevo
