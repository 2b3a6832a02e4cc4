#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcevo {

// The nine-gate alphabet. All gates are parameterized rotations:
//   R_a(theta)  = exp(-i theta sigma_a / 2)          a in {x, y, z}
//   CR_a(theta) = R_a on the target when the control is |1>
//   R_aa(theta) = exp(-i theta sigma_a (x) sigma_a / 2)
enum class GateKind : std::uint8_t { RX, RY, RZ, CRX, CRY, CRZ, RXX, RYY, RZZ };

inline constexpr int kNumGateKinds = 9;

constexpr bool is_two_qubit(GateKind kind) {
  return static_cast<int>(kind) >= static_cast<int>(GateKind::CRX);
}

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

struct Gate {
  GateKind kind = GateKind::RX;
  int q0 = 0;        // control for CR kinds, first qubit for R** kinds
  int q1 = -1;       // -1 for single-qubit kinds
  double theta = 0.0;

  // Throws std::invalid_argument for out-of-range or duplicate indices or an
  // arity mismatch with the kind.
  void validate(int num_qubits) const;
};

// An ordered gate list over a fixed register: both the static circuit
// representation and the individual evolved by the search loop.
struct CircuitGenome {
  int num_qubits = 0;
  std::vector<Gate> gates;

  void validate() const;
};

// Greedy layering: each gate sits one layer above the deepest layer already
// touching its qubits. Empty circuit has depth 0.
int depth(const CircuitGenome& genome);

// One line per gate, "KIND q0[,q1] theta", theta in shortest round-trip form.
std::string genome_to_text(const CircuitGenome& genome);
CircuitGenome genome_from_text(int num_qubits, const std::string& text);

}  // namespace qcevo
