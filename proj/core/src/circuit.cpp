#include "qcevo/circuit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qcevo {

namespace {
constexpr std::array<std::string_view, kNumGateKinds> kGateNames = {
    "RX", "RY", "RZ", "CRX", "CRY", "CRZ", "RXX", "RYY", "RZZ"};
}

std::string_view gate_name(GateKind kind) {
  return kGateNames[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kGateNames.size(); ++i) {
    if (kGateNames[i] == name) {
      return static_cast<GateKind>(i);
    }
  }
  return std::nullopt;
}

void Gate::validate(int num_qubits) const {
  if (q0 < 0 || q0 >= num_qubits) {
    throw std::invalid_argument("gate: qubit index out of range");
  }
  if (is_two_qubit(kind)) {
    if (q1 < 0 || q1 >= num_qubits) {
      throw std::invalid_argument("gate: qubit index out of range");
    }
    if (q1 == q0) {
      throw std::invalid_argument("gate: two-qubit gate needs distinct qubits");
    }
  } else if (q1 != -1) {
    throw std::invalid_argument("gate: single-qubit gate carries a second qubit");
  }
}

void CircuitGenome::validate() const {
  if (num_qubits < 1) {
    throw std::invalid_argument("genome: num_qubits must be >= 1");
  }
  for (const Gate& g : gates) {
    g.validate(num_qubits);
  }
}

int depth(const CircuitGenome& genome) {
  std::vector<int> layer(static_cast<std::size_t>(genome.num_qubits), 0);
  int deepest = 0;
  for (const Gate& g : genome.gates) {
    int base = layer[static_cast<std::size_t>(g.q0)];
    if (is_two_qubit(g.kind)) {
      base = std::max(base, layer[static_cast<std::size_t>(g.q1)]);
    }
    const int placed = base + 1;
    layer[static_cast<std::size_t>(g.q0)] = placed;
    if (is_two_qubit(g.kind)) {
      layer[static_cast<std::size_t>(g.q1)] = placed;
    }
    deepest = std::max(deepest, placed);
  }
  return deepest;
}

std::string genome_to_text(const CircuitGenome& genome) {
  std::string out;
  std::array<char, 64> buf;
  for (const Gate& g : genome.gates) {
    out += gate_name(g.kind);
    out += ' ';
    out += std::to_string(g.q0);
    if (is_two_qubit(g.kind)) {
      out += ',';
      out += std::to_string(g.q1);
    }
    out += ' ';
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), g.theta);
    out.append(buf.data(), end);
    out += '\n';
  }
  return out;
}

CircuitGenome genome_from_text(int num_qubits, const std::string& text) {
  CircuitGenome genome;
  genome.num_qubits = num_qubits;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream fields(line);
    std::string kind_name, qubits, theta_str;
    if (!(fields >> kind_name >> qubits >> theta_str)) {
      throw std::invalid_argument("genome: malformed line " + std::to_string(line_no));
    }
    auto kind = gate_kind_from_name(kind_name);
    if (!kind) {
      throw std::invalid_argument("genome: unknown gate '" + kind_name + "' on line " +
                                  std::to_string(line_no));
    }
    Gate g;
    g.kind = *kind;
    const auto comma = qubits.find(',');
    try {
      if (comma == std::string::npos) {
        g.q0 = std::stoi(qubits);
        g.q1 = -1;
      } else {
        g.q0 = std::stoi(qubits.substr(0, comma));
        g.q1 = std::stoi(qubits.substr(comma + 1));
      }
      g.theta = std::stod(theta_str);
    } catch (const std::exception&) {
      throw std::invalid_argument("genome: malformed line " + std::to_string(line_no));
    }
    g.validate(num_qubits);
    genome.gates.push_back(g);
  }
  return genome;
}

}  // namespace qcevo
