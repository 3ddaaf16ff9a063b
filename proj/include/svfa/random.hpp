#pragma once

#include <cstdint>
#include <span>

namespace svfa {

/// SplitMix64. Small, fast and platform-independent, so a seed reproduces the
/// same instances (and byte-identical reports) everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return Rng(mix.next());
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  bool coin() { return (next() >> 63) != 0; }

  template <class T>
  const T& pick(std::span<const T> items) {
    return items[below(items.size())];
  }

 private:
  std::uint64_t state_;
};

}  // namespace svfa
