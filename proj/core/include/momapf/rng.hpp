#pragma once

#include <cstdint>

namespace momapf {

// SplitMix64: the 64-bit counter-based generator used everywhere a pinned,
// portable stream is needed (edge cost sampling, test instance generation).
// The state advances by a fixed increment and the output is a bijective
// mixing of the counter, so streams are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi]. hi - lo is tiny in all our cost models,
  // so plain modulo reduction is used and kept as part of the pinned stream.
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace momapf
