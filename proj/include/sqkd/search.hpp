#pragma once

#include <cstdint>
#include <vector>

#include "sqkd/adversary.hpp"
#include "sqkd/protocol.hpp"

namespace sqkd {

struct AttackSearchResult {
  AdversaryStrategy strategy;
  double detection_rate = 0.0;       // aborted sessions / trials
  double key_corruption_rate = 0.0;  // sessions with rk_a != rk_b / trials
  std::uint64_t trials = 0;
  std::uint64_t detections = 0;
  std::uint64_t corruptions = 0;
};

struct SearchConfig {
  ProtocolParams params;
  std::vector<GateName> gates{GateName::I, GateName::X, GateName::Y,
                              GateName::Z, GateName::H, GateName::SpinFlip};
  std::vector<ClassicalPolicy> classical{ClassicalPolicy::None, ClassicalPolicy::FlipAll};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Evaluates every (gate_all(g), classical) strategy over `trials` sessions.
/// Trial t of every strategy uses session seed derive_seed(seed, t), so all
/// strategies face the same keys. Sorted by detection_rate ascending, then
/// key_corruption_rate descending, then sweep order. Parallel over
/// (strategy, trial) with OpenMP.
std::vector<AttackSearchResult> search_attacks(const SearchConfig& config);

/// Serial reference for search_attacks; identical output.
std::vector<AttackSearchResult> search_attacks_serial(const SearchConfig& config);

/// Strategies with detection_rate == 0 and key_corruption_rate == 1.
std::vector<AdversaryStrategy> undetected_full_corruption(const std::vector<AttackSearchResult>& results);

}  // namespace sqkd
