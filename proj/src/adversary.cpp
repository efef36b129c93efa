#include "sqkd/adversary.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace sqkd {

TwoQubitState tap_quantum(const QuantumPolicy& policy, const TwoQubitState& pair, Rng& eve_rng) {
  switch (policy.kind) {
    case QuantumPolicy::Kind::None:
      return pair;
    case QuantumPolicy::Kind::GateAll:
      return apply_gate(pair, standard_gate(policy.gate), Qubit::B);
    case QuantumPolicy::Kind::InterceptResendZ:
      return measure_z(pair, Qubit::B, eve_rng).post_state;
  }
  return pair;
}

BitSeq tap_classical(ClassicalPolicy policy, const BitSeq& announcement) {
  return policy == ClassicalPolicy::FlipAll ? announcement.complement() : announcement;
}

AdversaryStrategy modification_attack() {
  return {QuantumPolicy::gate_all(GateName::SpinFlip), ClassicalPolicy::FlipAll};
}

std::string quantum_policy_string(const QuantumPolicy& policy) {
  switch (policy.kind) {
    case QuantumPolicy::Kind::None: return "none";
    case QuantumPolicy::Kind::GateAll: return "gate_all:" + std::string(gate_name_string(policy.gate));
    case QuantumPolicy::Kind::InterceptResendZ: return "intercept_resend_z";
  }
  return "none";
}

std::string classical_policy_string(ClassicalPolicy policy) {
  return policy == ClassicalPolicy::FlipAll ? "flip_all" : "none";
}

QuantumPolicy parse_quantum_policy(std::string_view text) {
  if (text == "none") return QuantumPolicy::none();
  if (text == "intercept_resend_z") return QuantumPolicy::intercept_resend_z();
  constexpr std::string_view prefix = "gate_all:";
  if (text.substr(0, prefix.size()) == prefix) {
    return QuantumPolicy::gate_all(parse_gate_name(text.substr(prefix.size())));
  }
  throw std::invalid_argument("unknown quantum policy: " + std::string(text));
}

ClassicalPolicy parse_classical_policy(std::string_view text) {
  if (text == "none") return ClassicalPolicy::None;
  if (text == "flip_all") return ClassicalPolicy::FlipAll;
  throw std::invalid_argument("unknown classical policy: " + std::string(text));
}

AdversaryStrategy parse_strategy_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("strategy: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("strategy: expected a JSON object");
  AdversaryStrategy s;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_string()) throw std::invalid_argument("strategy: field '" + key + "' must be a string");
    if (key == "quantum") {
      s.quantum = parse_quantum_policy(value.get<std::string>());
    } else if (key == "classical") {
      s.classical = parse_classical_policy(value.get<std::string>());
    } else {
      throw std::invalid_argument("strategy: unknown field '" + key + "'");
    }
  }
  return s;
}

}  // namespace sqkd
