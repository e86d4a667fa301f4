#pragma once

#include <cstdint>

namespace dplab {

// Counter-based generator (splitmix64 hash of seed + counter). Stateless per
// draw, so a fixed seed gives bit-identical streams on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return hash(seed_ + 0x9E3779B97F4A7C15ull * ++counter_); }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  static std::uint64_t hash(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED0D1AB0ull;

}  // namespace dplab
