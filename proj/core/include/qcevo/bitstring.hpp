#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qcevo {

// Assignment of binary variables x_0..x_{N-1}. Bit p is the value of x_p.
//
// Rendering convention used everywhere in this project: bit 0 is the leftmost
// character of the string form, and the packed basis index stores bit 0 as the
// most significant bit. Index order and lexicographic string order therefore
// coincide, which pins down every tie-break rule below.
struct Bitstring {
  std::vector<std::uint8_t> bits;

  Bitstring() = default;
  explicit Bitstring(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  static Bitstring from_index(std::uint64_t index, int num_bits);
  std::uint64_t to_index() const;

  int size() const { return static_cast<int>(bits.size()); }

  std::string str() const;
  static Bitstring parse(const std::string& text);

  auto operator<=>(const Bitstring&) const = default;
};

}  // namespace qcevo
