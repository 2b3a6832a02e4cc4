#include "qcevo/noise.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcevo/rng.hpp"

namespace qcevo {

namespace {

// (gate position, pauli code 1..15); code digits (base 4) are the Paulis on
// the gate's two qubits.
using ErrorEvent = std::pair<int, int>;
using ErrorPattern = std::vector<ErrorEvent>;

void apply_error(StateVector& state, const Gate& gate, int code) {
  const int pauli0 = code >> 2;
  const int pauli1 = code & 3;
  if (pauli0 != 0) {
    apply_pauli(state, gate.q0, pauli0);
  }
  if (pauli1 != 0) {
    apply_pauli(state, gate.q1, pauli1);
  }
}

// Runs the circuit with the pattern's Pauli insertions. `prefix[i]` holds the
// noiseless state just after the i-th two-qubit gate, letting the trajectory
// skip everything before its first error.
StateVector run_with_errors(const CircuitGenome& genome, const ErrorPattern& pattern,
                            const std::vector<StateVector>& prefix,
                            const std::vector<int>& two_qubit_ordinal) {
  std::size_t next_event = 0;
  std::size_t start_gate = 0;
  StateVector state;
  const int first_gate = pattern.front().first;
  const int ordinal = two_qubit_ordinal[static_cast<std::size_t>(first_gate)];
  if (!prefix.empty()) {
    state = prefix[static_cast<std::size_t>(ordinal)];
    apply_error(state, genome.gates[static_cast<std::size_t>(first_gate)],
                pattern.front().second);
    next_event = 1;
    start_gate = static_cast<std::size_t>(first_gate) + 1;
  } else {
    state = StateVector::zero_state(genome.num_qubits);
  }
  for (std::size_t g = start_gate; g < genome.gates.size(); ++g) {
    apply_gate(state, genome.gates[g]);
    if (next_event < pattern.size() &&
        pattern[next_event].first == static_cast<int>(g)) {
      apply_error(state, genome.gates[g], pattern[next_event].second);
      ++next_event;
    }
  }
  return state;
}

std::vector<double> build_cdf(const StateVector& state) {
  std::vector<double> cdf(state.dim());
  double acc = 0.0;
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    acc += std::norm(state.amplitudes[k]);
    cdf[k] = acc;
  }
  return cdf;
}

std::uint64_t draw_outcome(const std::vector<double>& cdf, RngStream& stream) {
  const double u = stream.next_double() * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return it == cdf.end() ? cdf.size() - 1
                         : static_cast<std::uint64_t>(it - cdf.begin());
}

}  // namespace

void NoiseModel::validate() const {
  if (two_qubit_depolarizing_p < 0.0 || two_qubit_depolarizing_p > 1.0 ||
      readout_flip_q < 0.0 || readout_flip_q > 1.0) {
    throw std::invalid_argument("noise: probabilities must lie in [0, 1]");
  }
}

MeasurementRecord sample_noisy(const CircuitGenome& genome, std::uint64_t shots,
                               const NoiseModel& noise, std::uint64_t rng_seed) {
  noise.validate();
  genome.validate();
  if (shots < 1) {
    throw std::invalid_argument("sample_noisy: shots must be >= 1");
  }
  const int n = genome.num_qubits;
  const double p = noise.two_qubit_depolarizing_p;
  const double q = noise.readout_flip_q;

  std::vector<int> two_qubit_positions;
  std::vector<int> two_qubit_ordinal(genome.gates.size(), -1);
  for (std::size_t g = 0; g < genome.gates.size(); ++g) {
    if (is_two_qubit(genome.gates[g].kind)) {
      two_qubit_ordinal[g] = static_cast<int>(two_qubit_positions.size());
      two_qubit_positions.push_back(static_cast<int>(g));
    }
  }

  // Phase 1: per-shot error patterns. Streams persist so the outcome and
  // readout draws continue each shot's own sequence.
  std::vector<RngStream> streams;
  streams.reserve(shots);
  std::map<ErrorPattern, std::vector<std::uint64_t>> shots_by_pattern;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    streams.emplace_back(mix_seed({rng_seed, stream_tag::kShot, shot}));
    ErrorPattern pattern;
    if (p > 0.0) {
      for (int g : two_qubit_positions) {
        if (streams.back().next_double() < p) {
          pattern.emplace_back(g, 1 + static_cast<int>(streams.back().next_below(15)));
        }
      }
    }
    shots_by_pattern[std::move(pattern)].push_back(shot);
  }

  // Prefix states after each two-qubit gate; skipped when the register is too
  // large to cache them all.
  std::vector<StateVector> prefix;
  const bool any_errors =
      shots_by_pattern.size() > 1 || !shots_by_pattern.begin()->first.empty();
  if (any_errors && n <= 16 && !two_qubit_positions.empty()) {
    StateVector state = StateVector::zero_state(n);
    std::size_t next = 0;
    for (std::size_t g = 0; g < genome.gates.size(); ++g) {
      apply_gate(state, genome.gates[g]);
      if (next < two_qubit_positions.size() &&
          two_qubit_positions[next] == static_cast<int>(g)) {
        prefix.push_back(state);
        ++next;
      }
    }
  }

  // Phase 2: one simulation per distinct pattern, outcomes drawn per shot.
  std::vector<std::uint64_t> outcomes(shots);
  for (const auto& [pattern, group] : shots_by_pattern) {
    const StateVector state =
        pattern.empty() ? run_circuit(genome)
                        : run_with_errors(genome, pattern, prefix, two_qubit_ordinal);
    const std::vector<double> cdf = build_cdf(state);
    for (std::uint64_t shot : group) {
      outcomes[shot] = draw_outcome(cdf, streams[shot]);
    }
  }

  // Phase 3: readout flips, one draw per bit in qubit order.
  MeasurementRecord record;
  record.num_bits = n;
  record.total_shots = shots;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    std::uint64_t outcome = outcomes[shot];
    if (q > 0.0) {
      for (int b = 0; b < n; ++b) {
        if (streams[shot].next_double() < q) {
          outcome ^= 1ULL << (n - 1 - b);
        }
      }
    }
    ++record.counts[outcome];
  }
  return record;
}

}  // namespace qcevo
