#include "sqkd/search.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace sqkd {
namespace {

struct Counts {
  std::uint64_t detections = 0;
  std::uint64_t corruptions = 0;
};

std::vector<AdversaryStrategy> sweep(const SearchConfig& config) {
  std::vector<AdversaryStrategy> out;
  for (GateName g : config.gates) {
    for (ClassicalPolicy c : config.classical) out.push_back({QuantumPolicy::gate_all(g), c});
  }
  return out;
}

void tally(Counts& c, const SessionOutcome& o) {
  c.detections += o.aborted ? 1 : 0;
  c.corruptions += o.rk_a != o.rk_b ? 1 : 0;
}

std::vector<AttackSearchResult> finish(const std::vector<AdversaryStrategy>& strategies,
                                       const std::vector<Counts>& counts, std::uint64_t trials) {
  std::vector<AttackSearchResult> results;
  results.reserve(strategies.size());
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    AttackSearchResult r;
    r.strategy = strategies[s];
    r.trials = trials;
    r.detections = counts[s].detections;
    r.corruptions = counts[s].corruptions;
    r.detection_rate = static_cast<double>(r.detections) / static_cast<double>(trials);
    r.key_corruption_rate = static_cast<double>(r.corruptions) / static_cast<double>(trials);
    results.push_back(r);
  }
  // Stable sort keeps sweep order among ties.
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    if (a.detections != b.detections) return a.detections < b.detections;
    return a.corruptions > b.corruptions;
  });
  return results;
}

}  // namespace

void SearchConfig::validate() const {
  params.validate();
  if (trials < 1) throw std::invalid_argument("trials: must be at least 1");
  if (gates.empty() || classical.empty()) throw std::invalid_argument("search: empty strategy set");
}

std::vector<AttackSearchResult> search_attacks_serial(const SearchConfig& config) {
  config.validate();
  const auto strategies = sweep(config);
  std::vector<Counts> counts(strategies.size());
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      tally(counts[s], run_session(config.params, strategies[s], derive_seed(config.seed, t)));
    }
  }
  return finish(strategies, counts, config.trials);
}

std::vector<AttackSearchResult> search_attacks(const SearchConfig& config) {
  config.validate();
  const auto strategies = sweep(config);
  const auto total = static_cast<std::int64_t>(strategies.size() * config.trials);
  std::vector<Counts> counts(strategies.size());

#pragma omp parallel
  {
    std::vector<Counts> local(strategies.size());
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < total; ++k) {
      const auto s = static_cast<std::size_t>(k / static_cast<std::int64_t>(config.trials));
      const auto t = static_cast<std::uint64_t>(k % static_cast<std::int64_t>(config.trials));
      tally(local[s], run_session(config.params, strategies[s], derive_seed(config.seed, t)));
    }
#pragma omp critical
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      counts[s].detections += local[s].detections;
      counts[s].corruptions += local[s].corruptions;
    }
  }
  return finish(strategies, counts, config.trials);
}

std::vector<AdversaryStrategy> undetected_full_corruption(const std::vector<AttackSearchResult>& results) {
  std::vector<AdversaryStrategy> out;
  for (const auto& r : results) {
    if (r.detections == 0 && r.corruptions == r.trials) out.push_back(r.strategy);
  }
  return out;
}

}  // namespace sqkd
