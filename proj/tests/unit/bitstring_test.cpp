#include <gtest/gtest.h>

#include <stdexcept>

#include "qcevo/bitstring.hpp"

namespace {

using qcevo::Bitstring;

TEST(Bitstring, FromIndexUsesBitZeroAsMostSignificant) {
  const Bitstring x = Bitstring::from_index(1, 3);
  EXPECT_EQ(x.bits, (std::vector<std::uint8_t>{0, 0, 1}));
  const Bitstring y = Bitstring::from_index(4, 3);
  EXPECT_EQ(y.bits, (std::vector<std::uint8_t>{1, 0, 0}));
}

TEST(Bitstring, RoundTripsThroughIndexForAllThreeBitValues) {
  for (std::uint64_t index = 0; index < 8; ++index) {
    const Bitstring x = Bitstring::from_index(index, 3);
    EXPECT_EQ(x.size(), 3);
    EXPECT_EQ(x.to_index(), index);
  }
}

TEST(Bitstring, StrRendersBitZeroLeftmost) {
  EXPECT_EQ(Bitstring::from_index(1, 3).str(), "001");
  EXPECT_EQ(Bitstring::from_index(6, 3).str(), "110");
  EXPECT_EQ(Bitstring(std::vector<std::uint8_t>{1, 0}).str(), "10");
}

TEST(Bitstring, ParseInvertsStr) {
  for (std::uint64_t index = 0; index < 16; ++index) {
    const Bitstring x = Bitstring::from_index(index, 4);
    EXPECT_EQ(Bitstring::parse(x.str()), x);
  }
}

TEST(Bitstring, ParseRejectsNonBinaryCharacters) {
  EXPECT_THROW(Bitstring::parse("01x"), std::invalid_argument);
  EXPECT_THROW(Bitstring::parse("2"), std::invalid_argument);
}

TEST(Bitstring, OrderingMatchesIndexOrdering) {
  // Lexicographic order on the rendered string must equal numeric order on
  // the packed index; downstream tie-breaking relies on this.
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      const Bitstring xa = Bitstring::from_index(a, 4);
      const Bitstring xb = Bitstring::from_index(b, 4);
      EXPECT_EQ(xa < xb, a < b);
      EXPECT_EQ(xa.str() < xb.str(), a < b);
    }
  }
}

TEST(Bitstring, FromIndexRejectsBadWidth) {
  EXPECT_THROW(Bitstring::from_index(0, -1), std::invalid_argument);
  EXPECT_THROW(Bitstring::from_index(0, 64), std::invalid_argument);
}

TEST(Bitstring, ToIndexInvertsFromIndexAtFullWidth) {
  const std::uint64_t index = 0x5a5a5a5a5a5a5a5aULL >> 1;  // 63 bits
  EXPECT_EQ(Bitstring::from_index(index, 63).to_index(), index);
}

}  // namespace
