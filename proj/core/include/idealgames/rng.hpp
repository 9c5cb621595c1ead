// rng.hpp
// Deterministic random source for fixture generation. All randomized paths
// take an explicit seed so reports and transcripts are reproducible.
#pragma once

#include <cstdint>
#include <random>

namespace ig {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform in [0, n)
  int below(int n) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  // uniform in [lo, hi]
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (eng_() & 1) != 0; }
  std::uint64_t word() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ig
