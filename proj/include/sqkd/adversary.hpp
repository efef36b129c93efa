#pragma once

#include <string>
#include <string_view>

#include "sqkd/bitseq.hpp"
#include "sqkd/qsim.hpp"
#include "sqkd/rng.hpp"

namespace sqkd {

struct QuantumPolicy {
  enum class Kind { None, GateAll, InterceptResendZ };
  Kind kind = Kind::None;
  GateName gate = GateName::I;  // meaningful only for GateAll

  static QuantumPolicy none() { return {}; }
  static QuantumPolicy gate_all(GateName g) { return {Kind::GateAll, g}; }
  static QuantumPolicy intercept_resend_z() { return {Kind::InterceptResendZ, GateName::I}; }

  friend bool operator==(const QuantumPolicy&, const QuantumPolicy&) = default;
};

enum class ClassicalPolicy { None, FlipAll };

/// What Eve does on each channel. Eve only ever touches qubits in flight to
/// Bob and classical announcements; never Alice's retained qubits.
struct AdversaryStrategy {
  QuantumPolicy quantum;
  ClassicalPolicy classical = ClassicalPolicy::None;

  static AdversaryStrategy honest() { return {}; }

  friend bool operator==(const AdversaryStrategy&, const AdversaryStrategy&) = default;
};

/// Applies Eve's quantum policy to the Bob-side qubit of `pair`.
/// Intercept-resend measures that qubit in Z and forwards a fresh qubit in
/// the observed basis state, which is the post-measurement state itself.
TwoQubitState tap_quantum(const QuantumPolicy& policy, const TwoQubitState& pair, Rng& eve_rng);

BitSeq tap_classical(ClassicalPolicy policy, const BitSeq& announcement);

/// Spin-flip every flying qubit, flip every announced bit.
AdversaryStrategy modification_attack();

// Textual form shared with the CLI strategy files:
//   quantum:   "none" | "gate_all:<gate>" | "intercept_resend_z"
//   classical: "none" | "flip_all"
std::string quantum_policy_string(const QuantumPolicy& policy);
std::string classical_policy_string(ClassicalPolicy policy);
QuantumPolicy parse_quantum_policy(std::string_view text);
ClassicalPolicy parse_classical_policy(std::string_view text);

/// Parses {"quantum": ..., "classical": ...}; missing keys default to "none".
/// Throws std::invalid_argument on malformed input.
AdversaryStrategy parse_strategy_json(std::string_view json_text);

}  // namespace sqkd
