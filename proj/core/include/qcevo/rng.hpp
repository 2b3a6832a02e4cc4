#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace qcevo {

// SplitMix64 finalizer (Vigna). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Collapses (seed, tag, tag, ...) into a single stream seed. Order-sensitive,
// so (s, a, b) and (s, b, a) give unrelated streams.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) {
  std::uint64_t s = 0x243f6a8885a308d3ULL;
  for (std::uint64_t w : words) {
    s = mix64(s + 0x9e3779b97f4a7c15ULL * (w + 1));
  }
  return s;
}

// Counter-based deterministic random stream. One instance per logical unit of
// work (shot, offspring, restart): results never depend on evaluation order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix64(z);
  }

  // Uniform in [0, 1), 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n >= 1.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller. Always consumes exactly two uniforms.
  double next_gaussian() {
    double u1 = 1.0 - next_double();  // (0, 1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::uint64_t state_;
};

// Stream tags keeping independent uses of the same user seed decorrelated.
namespace stream_tag {
inline constexpr std::uint64_t kShot = 0x53484f54;       // per-shot sampling
inline constexpr std::uint64_t kInit = 0x494e4954;       // initial genome
inline constexpr std::uint64_t kOffspring = 0x4f464653;  // per-offspring mutation
inline constexpr std::uint64_t kMeasure = 0x4d454153;    // per-candidate measurement
inline constexpr std::uint64_t kQaoaStart = 0x51535452;  // per-restart start point
inline constexpr std::uint64_t kQaoaEval = 0x5145564c;   // per-evaluation record
inline constexpr std::uint64_t kGenerate = 0x47454e52;   // instance generation
}  // namespace stream_tag

}  // namespace qcevo
