#pragma once

#include <cstdint>

namespace qgraph {

// SplitMix64 (Steele, Lea, Vigna). Chosen as the project-wide generator
// because its output is a pure function of the 64-bit state on every
// platform, so generated graphs and CSV outputs are bit-reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in the half-open interval (0, 1].
  double next_unit_open_low() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be positive. Fixed-point 128-bit
  // multiply keeps the mapping identical across platforms.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace qgraph
