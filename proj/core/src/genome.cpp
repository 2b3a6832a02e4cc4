#include "qcevo/genome.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qcevo {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

enum class MutationKind { kInsert, kDelete, kSwap, kModify };

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) {
    t += kTwoPi;
  }
  if (t >= kTwoPi) {  // fmod/rounding can land exactly on the period
    t = 0.0;
  }
  return t;
}

// Walks the cumulative weights; the final bucket absorbs rounding slack.
MutationKind draw_kind(const double weights[4], RngStream& stream) {
  const double total = weights[0] + weights[1] + weights[2] + weights[3];
  const double u = stream.next_double() * total;
  double acc = 0.0;
  for (int k = 0; k < 3; ++k) {
    acc += weights[k];
    if (u < acc) {
      return static_cast<MutationKind>(k);
    }
  }
  return MutationKind::kModify;
}

}  // namespace

void MutationConfig::validate() const {
  const double probs[4] = {insert_prob, delete_prob, swap_prob, modify_prob};
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) {
      throw std::invalid_argument("mutation: probabilities must be non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("mutation: probabilities must sum to 1");
  }
  if (!(modify_sigma > 0.0)) {
    throw std::invalid_argument("mutation: modify_sigma must be positive");
  }
}

Gate random_gate(int num_qubits, RngStream& stream) {
  Gate gate;
  gate.kind = static_cast<GateKind>(stream.next_below(kNumGateKinds));
  gate.q0 = static_cast<int>(stream.next_below(static_cast<std::uint64_t>(num_qubits)));
  if (is_two_qubit(gate.kind)) {
    gate.q1 = static_cast<int>(
        stream.next_below(static_cast<std::uint64_t>(num_qubits - 1)));
    if (gate.q1 >= gate.q0) {
      ++gate.q1;  // skip q0: uniform over the n-1 remaining indices
    }
  }
  gate.theta = stream.next_double() * kTwoPi;
  return gate;
}

CircuitGenome random_initial(int num_qubits, std::uint64_t rng_seed) {
  if (num_qubits < 2) {
    throw std::invalid_argument("random_initial: num_qubits must be >= 2");
  }
  RngStream stream(mix_seed({rng_seed, stream_tag::kInit}));
  CircuitGenome genome;
  genome.num_qubits = num_qubits;
  genome.gates.push_back(random_gate(num_qubits, stream));
  return genome;
}

CircuitGenome mutate(const CircuitGenome& parent, const MutationConfig& config,
                     RngStream& stream) {
  config.validate();
  parent.validate();
  if (parent.gates.empty()) {
    throw std::invalid_argument("mutate: parent genome must be non-empty");
  }
  const std::size_t len = parent.gates.size();

  double weights[4] = {config.insert_prob, config.delete_prob, config.swap_prob,
                       config.modify_prob};
  MutationKind kind = draw_kind(weights, stream);
  if (kind == MutationKind::kDelete && len == 1) {
    // Never empty the genome: re-draw among the other three, renormalized.
    weights[1] = 0.0;
    if (weights[0] + weights[2] + weights[3] > 0.0) {
      kind = draw_kind(weights, stream);
    } else {
      kind = MutationKind::kModify;  // degenerate all-delete config
    }
  }

  CircuitGenome child = parent;
  switch (kind) {
    case MutationKind::kInsert: {
      const std::size_t pos = stream.next_below(len + 1);
      child.gates.insert(child.gates.begin() + static_cast<std::ptrdiff_t>(pos),
                         random_gate(parent.num_qubits, stream));
      break;
    }
    case MutationKind::kDelete: {
      const std::size_t pos = stream.next_below(len);
      child.gates.erase(child.gates.begin() + static_cast<std::ptrdiff_t>(pos));
      break;
    }
    case MutationKind::kSwap: {
      const std::size_t i = stream.next_below(len);
      if (config.swap_replaces_gate) {
        child.gates[i] = random_gate(parent.num_qubits, stream);
      } else {
        const std::size_t j = stream.next_below(len);
        std::swap(child.gates[i], child.gates[j]);
      }
      break;
    }
    case MutationKind::kModify: {
      const std::size_t i = stream.next_below(len);
      const double delta = stream.next_gaussian() * config.modify_sigma;
      child.gates[i].theta = wrap_angle(child.gates[i].theta + delta);
      break;
    }
  }
  return child;
}

std::vector<CircuitGenome> spawn_offspring(const CircuitGenome& parent, int count,
                                           const MutationConfig& config,
                                           std::uint64_t generation) {
  if (count < 1) {
    throw std::invalid_argument("spawn_offspring: count must be >= 1");
  }
  std::vector<CircuitGenome> offspring;
  offspring.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    RngStream stream(mix_seed({config.rng_seed, stream_tag::kOffspring, generation,
                               static_cast<std::uint64_t>(k)}));
    offspring.push_back(mutate(parent, config, stream));
  }
  return offspring;
}

}  // namespace qcevo
