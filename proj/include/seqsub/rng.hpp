#pragma once

#include <cstdint>
#include <random>

namespace seqsub {

// Seedable generator with explicit, implementation-independent mappings from
// the raw 64-bit stream to doubles, bounded ints and Poisson(1) draws, so a
// seed reproduces the same instances and runs on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in [0, bound), unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  // Poisson(lambda = 1) by CDF inversion. Terms beyond r = 20 carry total
  // mass below 1e-18 and are folded into the last bucket.
  int poisson1() {
    const double u = uniform();
    double term = 0.36787944117144233;  // e^-1
    double cum = term;
    int r = 0;
    while (u >= cum && r < 20) {
      ++r;
      term /= static_cast<double>(r);
      cum += term;
    }
    return r;
  }

 private:
  std::mt19937_64 gen_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Deterministic per-task seed derivation: absorbing the same tokens in the
// same order yields the same seed under any worker count.
class SeedDeriver {
 public:
  explicit SeedDeriver(std::uint64_t base) : state_(splitmix64(base)) {}

  SeedDeriver& absorb(std::uint64_t token) {
    state_ = splitmix64(state_ ^ token);
    return *this;
  }

  std::uint64_t seed() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace seqsub
