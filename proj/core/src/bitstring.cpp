#include "qcevo/bitstring.hpp"

#include <stdexcept>

namespace qcevo {

Bitstring Bitstring::from_index(std::uint64_t index, int num_bits) {
  if (num_bits < 0 || num_bits > 63) {
    throw std::invalid_argument("Bitstring: num_bits must be in [0, 63]");
  }
  Bitstring out;
  out.bits.resize(static_cast<std::size_t>(num_bits));
  for (int p = 0; p < num_bits; ++p) {
    out.bits[static_cast<std::size_t>(p)] =
        static_cast<std::uint8_t>((index >> (num_bits - 1 - p)) & 1u);
  }
  return out;
}

std::uint64_t Bitstring::to_index() const {
  if (bits.size() > 63) {
    throw std::invalid_argument("Bitstring: too wide to pack into 64 bits");
  }
  std::uint64_t index = 0;
  for (std::uint8_t b : bits) {
    index = (index << 1) | (b ? 1u : 0u);
  }
  return index;
}

std::string Bitstring::str() const {
  std::string s;
  s.reserve(bits.size());
  for (std::uint8_t b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

Bitstring Bitstring::parse(const std::string& text) {
  Bitstring out;
  out.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("Bitstring: invalid character in '" + text + "'");
    }
    out.bits.push_back(static_cast<std::uint8_t>(c == '1'));
  }
  return out;
}

}  // namespace qcevo
