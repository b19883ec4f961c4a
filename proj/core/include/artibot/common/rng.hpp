#pragma once

#include <cstdint>
#include <random>

namespace artibot {

// SplitMix64 step; used to derive decorrelated seeds from a root seed.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t hash_seed(uint64_t seed, uint64_t tag) {
  uint64_t s = seed ^ (0x8f1bbcdcbfa53e0bULL * (tag + 1));
  return splitmix64(s);
}

// mt19937_64 with hand-rolled value mappings. std::uniform_*_distribution is
// implementation-defined, which would break bit-exact reproducibility.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n), unbiased
  int uniform_int(int n) {
    const uint64_t nn = static_cast<uint64_t>(n);
    const uint64_t limit = (~uint64_t(0) / nn) * nn;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % nn);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Independent child stream; deterministic in (parent seed, tag).
  Rng fork(uint64_t tag) const { return Rng(hash_seed(seed_, tag)); }

  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace artibot
