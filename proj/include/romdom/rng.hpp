#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace romdom {

// SplitMix64. Every seeded stream in the library goes through this generator,
// so a given seed reproduces the same graphs and profiles on every run of a build.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    if (bound <= 1) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) noexcept { return unit() < p; }

  // Independent child stream keyed by `key`; the parent state is not advanced.
  constexpr SplitMix64 split(std::uint64_t key) const noexcept {
    return SplitMix64(mix(state_ ^ mix(key + 0x9E3779B97F4A7C15ULL)));
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Child seed derived from a base seed and a path of keys, e.g. {n, sample}.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> path) noexcept {
  SplitMix64 g(base);
  for (auto key : path) g = g.split(key);
  return g();
}

}  // namespace romdom
