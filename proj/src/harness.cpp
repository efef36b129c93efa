#include "sqkd/harness.hpp"

#include <omp.h>

#include <chrono>
#include <stdexcept>

namespace sqkd {

std::string variant_string(Variant v) { return v == Variant::Original ? "original" : "improved"; }

std::string attack_string(AttackKind a) {
  switch (a) {
    case AttackKind::None: return "none";
    case AttackKind::Modification: return "modification";
    case AttackKind::InterceptResend: return "intercept-resend";
    case AttackKind::Custom: return "custom";
  }
  return "none";
}

Variant parse_variant(const std::string& text) {
  if (text == "original") return Variant::Original;
  if (text == "improved") return Variant::Improved;
  throw std::invalid_argument("protocol: expected original or improved, got '" + text + "'");
}

AttackKind parse_attack(const std::string& text) {
  if (text == "none") return AttackKind::None;
  if (text == "modification") return AttackKind::Modification;
  if (text == "intercept-resend") return AttackKind::InterceptResend;
  if (text == "custom") return AttackKind::Custom;
  throw std::invalid_argument("attack: unknown attack '" + text + "'");
}

void RunConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials: must be at least 1");
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (attack == AttackKind::Custom && !custom_strategy) {
    throw std::invalid_argument("strategy_file: custom attack needs a strategy description");
  }
  protocol_params().validate();
}

ProtocolParams RunConfig::protocol_params() const {
  ProtocolParams p;
  p.n = n;
  p.variant = protocol;
  p.tau = tau;
  p.hash_bits = hash_bits;
  p.pa_bits = pa_bits;
  p.balanced_k2 = balanced_k2;
  return p;
}

AdversaryStrategy RunConfig::strategy() const {
  switch (attack) {
    case AttackKind::None: return AdversaryStrategy::honest();
    case AttackKind::Modification: return modification_attack();
    case AttackKind::InterceptResend: return {QuantumPolicy::intercept_resend_z(), ClassicalPolicy::None};
    case AttackKind::Custom: return custom_strategy.value_or(AdversaryStrategy::honest());
  }
  return AdversaryStrategy::honest();
}

void SessionTally::add(const SessionOutcome& o) {
  ++trials;
  detected += (o.detected_by_alice || o.detected_by_bob) ? 1 : 0;
  aborted += o.aborted ? 1 : 0;
  key_match += (!o.aborted && o.rk_a == o.rk_b && o.sk_a && o.sk_b && *o.sk_a == *o.sk_b) ? 1 : 0;
  raw_key_complement += (o.rk_b == o.rk_a.complement()) ? 1 : 0;
  check_mismatches += o.check_mismatch_count_alice + o.check_mismatch_count_bob;
  compared_check_bits += o.compared_bits_alice + o.compared_bits_bob;
  vacuous_check_sessions += o.vacuous_check ? 1 : 0;
}

void SessionTally::merge(const SessionTally& other) {
  trials += other.trials;
  detected += other.detected;
  aborted += other.aborted;
  key_match += other.key_match;
  raw_key_complement += other.raw_key_complement;
  check_mismatches += other.check_mismatches;
  compared_check_bits += other.compared_check_bits;
  vacuous_check_sessions += other.vacuous_check_sessions;
}

AggregateReport make_report(const RunConfig& config, const SessionTally& tally, std::int64_t wall_time_ms) {
  auto rate = [](std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  AggregateReport r;
  r.config = config;
  r.tally = tally;
  r.detection_rate = rate(tally.detected, tally.trials);
  r.abort_rate = rate(tally.aborted, tally.trials);
  r.key_match_rate = rate(tally.key_match, tally.trials);
  r.raw_key_complement_rate = rate(tally.raw_key_complement, tally.trials);
  r.mean_check_error_rate = rate(tally.check_mismatches, tally.compared_check_bits);
  r.vacuous_check_sessions = tally.vacuous_check_sessions;
  r.wall_time_ms = wall_time_ms;
  return r;
}

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

AggregateReport run_batch_serial(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const ProtocolParams params = config.protocol_params();
  const AdversaryStrategy strategy = config.strategy();
  SessionTally tally;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    tally.add(run_session(params, strategy, derive_seed(config.seed, t)));
  }
  return make_report(config, tally, elapsed_ms(start));
}

AggregateReport run_batch(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const ProtocolParams params = config.protocol_params();
  const AdversaryStrategy strategy = config.strategy();
  const auto trials = static_cast<std::int64_t>(config.trials);
  SessionTally tally;

#pragma omp parallel
  {
    SessionTally local;
#pragma omp for schedule(static)
    for (std::int64_t t = 0; t < trials; ++t) {
      local.add(run_session(params, strategy, derive_seed(config.seed, static_cast<std::uint64_t>(t))));
    }
#pragma omp critical
    tally.merge(local);
  }
  return make_report(config, tally, elapsed_ms(start));
}

SearchConfig search_config_from(const RunConfig& config) {
  SearchConfig sc;
  sc.params = config.protocol_params();
  sc.trials = config.trials;
  sc.seed = config.seed;
  return sc;
}

}  // namespace sqkd
