#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace mgpir {

/// Deterministic pseudorandom generator used everywhere randomness is needed.
/// The core generator is std::mt19937_64, whose output sequence is fixed by
/// the C++ standard; all derived draws (bounded integers, shuffles) are
/// implemented here rather than with std::uniform_int_distribution, so the
/// same seed yields the same bytes on every platform and toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform draw from [0, n), unbiased via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t overhang = (max % n + 1) % n;
    std::uint64_t v = next();
    if (overhang != 0) {
      while (v > max - overhang) v = next();
    }
    return v % n;
  }

  int bit() { return static_cast<int>(next() >> 63); }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  /// Folds several values into one seed (splitmix64 finalizer per step).
  static std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t p : parts) {
      h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h = splitmix(h);
    }
    return h;
  }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 gen_;
};

}  // namespace mgpir
