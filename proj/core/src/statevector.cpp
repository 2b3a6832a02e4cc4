#include "qcevo/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcevo/bitstring.hpp"
#include "qcevo/rng.hpp"

namespace qcevo {

namespace {

using cplx = std::complex<double>;

struct Mat2 {
  cplx m00, m01, m10, m11;
};

Mat2 rotation_matrix(GateKind kind, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  switch (kind) {
    case GateKind::RX:
    case GateKind::CRX:
      return {cplx(c, 0), cplx(0, -s), cplx(0, -s), cplx(c, 0)};
    case GateKind::RY:
    case GateKind::CRY:
      return {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
    case GateKind::RZ:
    case GateKind::CRZ:
      return {cplx(c, -s), cplx(0, 0), cplx(0, 0), cplx(c, s)};
    default:
      throw std::logic_error("rotation_matrix: not a single-qubit rotation kind");
  }
}

// In-place 2x2 kernel over the target bit, optionally restricted to the
// subspace where the control bit is 1.
void apply_single(StateVector& state, int target, const Mat2& m, int control = -1) {
  const int n = state.num_qubits;
  const std::uint64_t target_mask = 1ULL << (n - 1 - target);
  const std::uint64_t control_mask = control >= 0 ? (1ULL << (n - 1 - control)) : 0;
  const std::uint64_t dim = state.dim();
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & target_mask) {
      continue;
    }
    if (control_mask && !(k & control_mask)) {
      continue;
    }
    const std::uint64_t k1 = k | target_mask;
    const cplx a0 = state.amplitudes[k];
    const cplx a1 = state.amplitudes[k1];
    state.amplitudes[k] = m.m00 * a0 + m.m01 * a1;
    state.amplitudes[k1] = m.m10 * a0 + m.m11 * a1;
  }
}

// Symmetric two-qubit rotations act on the (00,11) and (01,10) pairs:
//   RXX: cos I - i sin on both pairs
//   RYY: cos I - i sin on (01,10), cos I + i sin on (00,11)
//   RZZ: diagonal phases exp(-+ i theta/2)
void apply_symmetric_pair(StateVector& state, const Gate& gate) {
  const int n = state.num_qubits;
  const std::uint64_t mask0 = 1ULL << (n - 1 - gate.q0);
  const std::uint64_t mask1 = 1ULL << (n - 1 - gate.q1);
  const double c = std::cos(gate.theta / 2.0);
  const double s = std::sin(gate.theta / 2.0);
  const std::uint64_t dim = state.dim();

  if (gate.kind == GateKind::RZZ) {
    const cplx even(c, -s);  // equal bits: ZZ eigenvalue +1
    const cplx odd(c, s);
    for (std::uint64_t k = 0; k < dim; ++k) {
      const bool b0 = (k & mask0) != 0;
      const bool b1 = (k & mask1) != 0;
      state.amplitudes[k] *= (b0 == b1) ? even : odd;
    }
    return;
  }

  const cplx off_eq = gate.kind == GateKind::RXX ? cplx(0, -s) : cplx(0, s);
  const cplx off_ne(0, -s);
  for (std::uint64_t k = 0; k < dim; ++k) {
    if ((k & mask0) || (k & mask1)) {
      continue;
    }
    const std::uint64_t k00 = k;
    const std::uint64_t k01 = k | mask1;
    const std::uint64_t k10 = k | mask0;
    const std::uint64_t k11 = k | mask0 | mask1;
    const cplx a00 = state.amplitudes[k00];
    const cplx a01 = state.amplitudes[k01];
    const cplx a10 = state.amplitudes[k10];
    const cplx a11 = state.amplitudes[k11];
    state.amplitudes[k00] = c * a00 + off_eq * a11;
    state.amplitudes[k11] = c * a11 + off_eq * a00;
    state.amplitudes[k01] = c * a01 + off_ne * a10;
    state.amplitudes[k10] = c * a10 + off_ne * a01;
  }
}

}  // namespace

StateVector StateVector::zero_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) {
    throw std::invalid_argument("statevector: num_qubits must be in [1, 30]");
  }
  StateVector state;
  state.num_qubits = num_qubits;
  state.amplitudes.assign(1ULL << num_qubits, cplx(0, 0));
  state.amplitudes[0] = cplx(1, 0);
  return state;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const cplx& a : amplitudes) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

double StateVector::probability(std::uint64_t basis_index) const {
  return std::norm(amplitudes[basis_index]);
}

void apply_gate(StateVector& state, const Gate& gate) {
  gate.validate(state.num_qubits);
  switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      apply_single(state, gate.q0, rotation_matrix(gate.kind, gate.theta));
      break;
    case GateKind::CRX:
    case GateKind::CRY:
    case GateKind::CRZ:
      apply_single(state, gate.q1, rotation_matrix(gate.kind, gate.theta), gate.q0);
      break;
    case GateKind::RXX:
    case GateKind::RYY:
    case GateKind::RZZ:
      apply_symmetric_pair(state, gate);
      break;
  }
}

void apply_pauli(StateVector& state, int qubit, int pauli) {
  if (qubit < 0 || qubit >= state.num_qubits || pauli < 1 || pauli > 3) {
    throw std::invalid_argument("apply_pauli: bad qubit or pauli index");
  }
  const std::uint64_t mask = 1ULL << (state.num_qubits - 1 - qubit);
  const std::uint64_t dim = state.dim();
  if (pauli == 3) {  // Z
    for (std::uint64_t k = 0; k < dim; ++k) {
      if (k & mask) {
        state.amplitudes[k] = -state.amplitudes[k];
      }
    }
    return;
  }
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (k & mask) {
      continue;
    }
    const std::uint64_t k1 = k | mask;
    if (pauli == 1) {  // X
      std::swap(state.amplitudes[k], state.amplitudes[k1]);
    } else {  // Y: |0> -> i|1>, |1> -> -i|0>
      const cplx a0 = state.amplitudes[k];
      const cplx a1 = state.amplitudes[k1];
      state.amplitudes[k] = cplx(0, -1) * a1;
      state.amplitudes[k1] = cplx(0, 1) * a0;
    }
  }
}

StateVector run_circuit(const CircuitGenome& genome) {
  genome.validate();
  StateVector state = StateVector::zero_state(genome.num_qubits);
  for (const Gate& gate : genome.gates) {
    apply_gate(state, gate);
  }
  return state;
}

double exact_expectation(const StateVector& state, const IsingHamiltonian& ham) {
  if (ham.num_qubits != state.num_qubits) {
    throw std::invalid_argument("exact_expectation: qubit count mismatch");
  }
  double value = 0.0;
  const std::uint64_t dim = state.dim();
  for (std::uint64_t k = 0; k < dim; ++k) {
    const double p = std::norm(state.amplitudes[k]);
    if (p > 0.0) {
      value += p * ham.energy(k);
    }
  }
  return value;
}

std::string MeasurementRecord::to_text() const {
  std::string out;
  for (const auto& [index, count] : counts) {
    out += Bitstring::from_index(index, num_bits).str();
    out += ' ';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

MeasurementRecord sample(const StateVector& state, std::uint64_t shots,
                         std::uint64_t rng_seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample: shots must be >= 1");
  }
  std::vector<double> cdf(state.dim());
  double acc = 0.0;
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    acc += std::norm(state.amplitudes[k]);
    cdf[k] = acc;
  }

  MeasurementRecord record;
  record.num_bits = state.num_qubits;
  record.total_shots = shots;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    RngStream stream(mix_seed({rng_seed, stream_tag::kShot, shot}));
    // upper_bound skips zero-probability plateaus even when u lands exactly
    // on a CDF boundary; u < acc always holds since next_double() < 1.
    const double u = stream.next_double() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t outcome =
        it == cdf.end() ? state.dim() - 1
                        : static_cast<std::uint64_t>(it - cdf.begin());
    ++record.counts[outcome];
  }
  return record;
}

}  // namespace qcevo
