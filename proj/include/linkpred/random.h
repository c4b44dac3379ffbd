#pragma once

#include <cstdint>
#include <random>

namespace linkpred {

/// Seeded generator with platform-independent derived draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double NextDouble() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, n).
  std::uint64_t NextIndex(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }
  bool Bernoulli(double p) { return NextDouble() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace linkpred
