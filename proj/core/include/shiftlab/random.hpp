#pragma once

#include <cstdint>
#include <random>

namespace shiftlab {

/// Derives an independent 64-bit stream seed from a root seed and a stream
/// label using the SplitMix64 finalizer. Distinct labels give uncorrelated
/// streams; the mapping is fixed, so results reproduce across platforms.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

/// Portable random source: std::mt19937_64 (whose output sequence is fixed by
/// the standard) plus rejection-sampled bounded draws. The standard
/// distributions are avoided because their algorithms are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// True with probability p (53-bit resolution).
  bool bernoulli(double p);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace shiftlab
