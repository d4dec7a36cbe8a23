#pragma once

#include <cstdint>
#include <random>

namespace bimonn {

/// Deterministic random source. The engine (mt19937_64) is fully specified by
/// the standard; all value mappings are done by hand because the standard
/// distributions are implementation-defined and would break cross-toolchain
/// reproducibility of seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : root_(mix(seed, stream)), engine_(root_) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool bernoulli(double prob) { return uniform() < prob; }

  /// Independent child stream; stable regardless of draws made so far.
  Rng fork(std::uint64_t stream) const { return Rng(root_, stream + 1); }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the (seed, stream) pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t root_;
  std::mt19937_64 engine_;
};

}  // namespace bimonn
