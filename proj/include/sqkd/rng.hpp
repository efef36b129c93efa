#pragma once

#include <cstdint>
#include <random>

namespace sqkd {

/// One step of SplitMix64 at position `index + 1` of the stream seeded by
/// `master`. Used to split a master seed into independent per-trial and
/// per-party seeds, so serial and parallel execution see identical streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Random stream owned by exactly one party / thread.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) built from the top 53 bits, so the value is
  /// identical on every standard library.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bit() { return (engine_() >> 63) != 0; }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sqkd
