#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace pivot {

// Seeded RNG used everywhere randomness is needed. mt19937_64 output is fixed
// by the standard, and the bounded draw below avoids
// std::uniform_int_distribution, whose mapping is implementation-defined, so
// every seeded result is reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n) by rejection sampling. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return v % n;
  }

  // Fair coin.
  bool coin() { return (gen_() & 1u) != 0; }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pivot
