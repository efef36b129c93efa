#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

#include "sqkd/harness.hpp"

namespace sqkd {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const RunConfig& c) {
  const AdversaryStrategy s = c.strategy();
  ordered_json j;
  j["protocol"] = variant_string(c.protocol);
  j["attack"] = attack_string(c.attack);
  j["strategy"] = {{"quantum", quantum_policy_string(s.quantum)}, {"classical", classical_policy_string(s.classical)}};
  j["n"] = c.n;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["tau"] = c.tau;
  j["hash_bits"] = c.hash_bits;
  if (c.pa_bits) {
    j["pa_bits"] = *c.pa_bits;
  } else {
    j["pa_bits"] = "auto";
  }
  j["balanced_k2"] = c.balanced_k2;
  return j;
}

// Shortest round-trip form, so CSV and JSON carry the same values.
std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

std::string render_json(const AggregateReport& r) {
  ordered_json j;
  j["config"] = config_json(r.config);
  j["detection_rate"] = r.detection_rate;
  j["abort_rate"] = r.abort_rate;
  j["key_match_rate"] = r.key_match_rate;
  j["raw_key_complement_rate"] = r.raw_key_complement_rate;
  j["mean_check_error_rate"] = r.mean_check_error_rate;
  j["vacuous_check_sessions"] = r.vacuous_check_sessions;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump(2) + "\n";
}

std::string render_csv(const AggregateReport& r) {
  const RunConfig& c = r.config;
  const AdversaryStrategy s = c.strategy();
  std::ostringstream os;
  os << "protocol,attack,quantum,classical,n,trials,seed,tau,hash_bits,pa_bits,balanced_k2,"
        "detection_rate,abort_rate,key_match_rate,raw_key_complement_rate,mean_check_error_rate,"
        "vacuous_check_sessions,wall_time_ms\n";
  os << variant_string(c.protocol) << ',' << attack_string(c.attack) << ',' << quantum_policy_string(s.quantum) << ','
     << classical_policy_string(s.classical) << ',' << c.n << ',' << c.trials << ',' << c.seed << ',' << num(c.tau)
     << ',' << c.hash_bits << ',' << (c.pa_bits ? std::to_string(*c.pa_bits) : std::string("auto")) << ','
     << (c.balanced_k2 ? "true" : "false") << ',' << num(r.detection_rate) << ',' << num(r.abort_rate) << ','
     << num(r.key_match_rate) << ',' << num(r.raw_key_complement_rate) << ',' << num(r.mean_check_error_rate) << ','
     << r.vacuous_check_sessions << ',' << r.wall_time_ms << '\n';
  return os.str();
}

std::string render_search_json(const RunConfig& config, const std::vector<AttackSearchResult>& results) {
  ordered_json j;
  ordered_json cfg = config_json(config);
  cfg.erase("attack");
  cfg.erase("strategy");
  j["config"] = cfg;
  j["results"] = ordered_json::array();
  for (const auto& r : results) {
    ordered_json row;
    row["quantum"] = quantum_policy_string(r.strategy.quantum);
    row["classical"] = classical_policy_string(r.strategy.classical);
    row["detection_rate"] = r.detection_rate;
    row["key_corruption_rate"] = r.key_corruption_rate;
    row["trials"] = r.trials;
    j["results"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string render_search_csv(const std::vector<AttackSearchResult>& results) {
  std::ostringstream os;
  os << "quantum,classical,detection_rate,key_corruption_rate,trials\n";
  for (const auto& r : results) {
    os << quantum_policy_string(r.strategy.quantum) << ',' << classical_policy_string(r.strategy.classical) << ','
       << num(r.detection_rate) << ',' << num(r.key_corruption_rate) << ',' << r.trials << '\n';
  }
  return os.str();
}

}  // namespace sqkd
