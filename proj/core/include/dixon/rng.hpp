#pragma once

#include <cstdint>

namespace dixon {

// splitmix64: tiny, high-quality, and bit-for-bit reproducible everywhere,
// which std::uniform_int_distribution is not. Used for all seeded trials.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw from [lo, hi], inclusive. The modulo bias is far below
  // anything that matters for randomized identity trials.
  long next_in(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace dixon
