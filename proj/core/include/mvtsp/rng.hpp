#ifndef MVTSP_RNG_HPP
#define MVTSP_RNG_HPP

#include <cstdint>

namespace mvtsp {

// Counter-based pseudo random generator (SplitMix64 over seed # counter).
// Stateless apart from the counter: the i-th output of a given seed is a pure
// function of (seed, i), so seeded runs reproduce bit-exactly regardless of
// call interleaving elsewhere.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(mix(seed ^ mix(stream))) {}

  std::uint64_t next() { return mix(seed_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform in [0, bound); bound >= 1. Rejection sampling keeps it unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = bound * (~0ULL / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform t-bit value, t <= 64.
  std::uint64_t next_bits(int t) {
    std::uint64_t x = next();
    return t >= 64 ? x : (x & ((1ULL << t) - 1));
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Derive an independent generator for a named sub-task.
  CounterRng fork(std::uint64_t stream) { return CounterRng(seed_, mix(stream) ^ next()); }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace mvtsp

#endif  // MVTSP_RNG_HPP
