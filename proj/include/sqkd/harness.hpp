#pragma once

// Monte-Carlo batches over protocol sessions, report rendering, and the
// fixed replay of the published four-pair attack example.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqkd/adversary.hpp"
#include "sqkd/protocol.hpp"
#include "sqkd/search.hpp"

namespace sqkd {

enum class AttackKind { None, Modification, InterceptResend, Custom };
enum class OutputFormat { Json, Csv };

std::string variant_string(Variant v);
std::string attack_string(AttackKind a);
Variant parse_variant(const std::string& text);
AttackKind parse_attack(const std::string& text);

struct RunConfig {
  Variant protocol = Variant::Original;
  AttackKind attack = AttackKind::None;
  std::optional<AdversaryStrategy> custom_strategy;
  std::size_t n = 32;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tau = 0.0;
  std::size_t hash_bits = 64;
  std::optional<std::size_t> pa_bits;  // nullopt = auto
  bool balanced_k2 = false;
  OutputFormat format = OutputFormat::Json;
  std::string output_path;  // empty = standard output

  /// Throws std::invalid_argument with a message naming the field.
  void validate() const;
  ProtocolParams protocol_params() const;
  AdversaryStrategy strategy() const;
};

/// Integer counts summed over sessions; merge order does not matter.
struct SessionTally {
  std::uint64_t trials = 0;
  std::uint64_t detected = 0;
  std::uint64_t aborted = 0;
  std::uint64_t key_match = 0;
  std::uint64_t raw_key_complement = 0;
  std::uint64_t check_mismatches = 0;
  std::uint64_t compared_check_bits = 0;
  std::uint64_t vacuous_check_sessions = 0;

  void add(const SessionOutcome& o);
  void merge(const SessionTally& other);
  friend bool operator==(const SessionTally&, const SessionTally&) = default;
};

struct AggregateReport {
  RunConfig config;
  SessionTally tally;
  double detection_rate = 0.0;
  double abort_rate = 0.0;
  double key_match_rate = 0.0;
  double raw_key_complement_rate = 0.0;
  double mean_check_error_rate = 0.0;  // pooled mismatches / compared bits
  std::uint64_t vacuous_check_sessions = 0;
  std::int64_t wall_time_ms = 0;
};

AggregateReport make_report(const RunConfig& config, const SessionTally& tally, std::int64_t wall_time_ms);

/// Runs config.trials sessions with seeds derive_seed(config.seed, t),
/// OpenMP-parallel over trials.
AggregateReport run_batch(const RunConfig& config);

/// Serial reference for run_batch; identical report apart from wall time.
AggregateReport run_batch_serial(const RunConfig& config);

std::string render_json(const AggregateReport& report);
std::string render_csv(const AggregateReport& report);

SearchConfig search_config_from(const RunConfig& config);
std::string render_search_json(const RunConfig& config, const std::vector<AttackSearchResult>& results);
std::string render_search_csv(const std::vector<AttackSearchResult>& results);

/// One asserted value of the replayed example.
struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct PaperExampleReport {
  std::uint64_t seed = 0;
  SessionOutcome outcome;
  Partition alice_partition;
  Partition bob_partition;
  std::vector<ExampleCheck> checks;
  bool ok() const;
};

/// Four pairs, k2 = 1100, modification attack, original variant, with the
/// measurement stream chosen so that M_A = 0011.
PaperExampleReport replay_paper_example();
void print_paper_example(const PaperExampleReport& report, std::ostream& os);

}  // namespace sqkd
