#pragma once

#include <cstdint>

namespace secdim {

// Splittable counter-style generator. Every random choice in the engine is
// derived from an explicit seed so that certificates are reproducible across
// platforms; no global RNG state exists anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Order-sensitive combine used to derive per-task seeds from a master seed.
inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (0x2545f4914f6cdd1dULL + (b << 1 | 1)));
  g.next();
  return g.next() ^ b;
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix(mix(a, b), c);
}

}  // namespace secdim
