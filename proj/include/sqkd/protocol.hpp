#pragma once

// Alice/Bob state machines for the authenticated semi-quantum key
// distribution protocol, in its original form (bitwise check-bit exchange)
// and the improved form (keyed-hash digests of the check bits).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqkd/adversary.hpp"
#include "sqkd/bitseq.hpp"
#include "sqkd/qsim.hpp"
#include "sqkd/rng.hpp"

namespace sqkd {

enum class Variant { Original, Improved };

enum class Party { Alice, Bob };

/// A protocol-level failure observed by one party. Always aborts the session.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(Party detected_by, const std::string& what)
      : std::runtime_error(what), detected_by_(detected_by) {}
  Party detected_by() const { return detected_by_; }

 private:
  Party detected_by_;
};

struct MasterKeys {
  BitSeq k1;  // operation key: bit i selects I (0) or H (1) on pair i
  BitSeq k2;  // partition key: bit i selects raw key (0) or check (1)
  BitSeq kh;  // hash key, improved variant only

  /// Throws std::invalid_argument unless |k1| = |k2| = 2n.
  void validate(std::size_t n) const;

  friend bool operator==(const MasterKeys&, const MasterKeys&) = default;
};

/// Uniform keys of length 2n (k1, k2) and kh_bits (kh). With `balanced_k2`
/// exactly n positions are check positions.
MasterKeys generate_master_keys(std::size_t n, std::size_t kh_bits, Rng& rng, bool balanced_k2 = false);

/// The restricted operation set of the classical party.
enum class ClassicalOp { Identity, Hadamard };
Gate classical_gate(ClassicalOp op);
inline ClassicalOp op_for_key_bit(std::uint8_t k1_bit) {
  return k1_bit ? ClassicalOp::Hadamard : ClassicalOp::Identity;
}

/// Index of a pair whose Bob-side qubit is travelling on the quantum channel.
struct QubitRef {
  std::size_t pair;
};

/// Every Bell pair lives in one 4-amplitude vector; Alice keeps the A halves,
/// the B halves travel as `in_flight` references in order.
struct PreparedPairs {
  std::vector<TwoQubitState> pairs;
  std::vector<QubitRef> in_flight;
};

PreparedPairs alice_prepare(const MasterKeys& keys, std::size_t n);

/// Bob applies I/H per k1 to each delivered qubit and measures it in Z.
/// Throws ProtocolError (Bob) unless exactly |k1| qubits arrive.
BitSeq bob_receive_measure(const MasterKeys& keys, std::vector<TwoQubitState>& pairs,
                           std::span<const QubitRef> delivered, Rng& bob_rng);

BitSeq alice_measure(std::vector<TwoQubitState>& pairs, Rng& alice_rng);

struct Partition {
  enum class Dest { Raw, Check };
  struct Slot {
    Dest dest;
    std::size_t index;
  };

  BitSeq raw;
  BitSeq check;
  BitSeq check_odd;   // 1-based odd positions of `check`
  BitSeq check_even;  // 1-based even positions of `check`
  std::vector<Slot> positions;
};

/// Throws std::invalid_argument if |m| != |k2|.
Partition partition_by_k2(const BitSeq& m, const BitSeq& k2);

/// Inverse of partition_by_k2 through `positions`.
BitSeq reassemble(const Partition& p);

/// Transcript of the check-bit (or digest) exchange.
struct CheckReport {
  bool alice_pass = false;
  bool bob_pass = false;
  std::size_t mismatches_alice = 0;
  std::size_t mismatches_bob = 0;
  std::size_t compared_alice = 0;
  std::size_t compared_bob = 0;
  bool vacuous_alice = false;
  bool vacuous_bob = false;
  BitSeq alice_sent;      // C_A^E, or its digest
  BitSeq bob_sent;        // C_B^O, or its digest
  BitSeq alice_received;  // what reached Alice
  BitSeq bob_received;    // what reached Bob

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Alice announces C_A^E, Bob announces C_B^O. Each side passes iff the
/// mismatch fraction against its own retained half is <= tau (vacuously when
/// nothing is compared). Throws ProtocolError on announcement length mismatch.
CheckReport exchange_and_check_original(const Partition& alice, const Partition& bob, double tau,
                                        ClassicalPolicy channel);

/// Digest direction tags prepended to the hashed half.
inline constexpr std::uint8_t kAliceToBobTag = 0;
inline constexpr std::uint8_t kBobToAliceTag = 1;

/// h(tag || half) with the Toeplitz spec expanded from kh.
BitSeq check_digest(const BitSeq& kh, std::uint8_t direction_tag, const BitSeq& half, std::size_t out_len);

/// Each side announces only an out_len-bit digest of its half and requires
/// exact equality. Empty halves are not announced and pass vacuously.
/// Throws ProtocolError if a digest of the wrong length arrives.
CheckReport exchange_and_check_improved(const Partition& alice, const Partition& bob, const BitSeq& kh,
                                        std::size_t out_len, ClassicalPolicy channel);

struct ProtocolParams {
  std::size_t n = 32;  // the protocol uses 2n pairs
  Variant variant = Variant::Original;
  double tau = 0.0;
  std::size_t hash_bits = 64;
  std::optional<std::size_t> pa_bits;  // nullopt = floor(|raw| / 2)
  bool balanced_k2 = false;
  std::size_t kh_bits = 256;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SessionOutcome {
  bool aborted = false;
  bool detected_by_alice = false;
  bool detected_by_bob = false;
  std::string abort_reason;
  bool done_notice = false;

  MasterKeys keys;
  BitSeq m_a, m_b;
  BitSeq rk_a, rk_b;
  std::optional<BitSeq> sk_a, sk_b;
  BitSeq pa_seed;
  CheckReport check;

  std::size_t check_mismatch_count_alice = 0;
  std::size_t check_mismatch_count_bob = 0;
  std::size_t compared_bits_alice = 0;
  std::size_t compared_bits_bob = 0;
  bool vacuous_check = false;

  friend bool operator==(const SessionOutcome&, const SessionOutcome&) = default;
};

/// Per-session stream ids under derive_seed(session_seed, id).
enum class Stream : std::uint64_t { Keys = 0, Alice = 1, Bob = 2, Eve = 3 };

/// Full session with freshly drawn master keys.
SessionOutcome run_session(const ProtocolParams& params, const AdversaryStrategy& adversary, std::uint64_t seed);

/// Full session with caller-provided master keys.
SessionOutcome run_session_with_keys(const ProtocolParams& params, const MasterKeys& keys,
                                     const AdversaryStrategy& adversary, std::uint64_t seed);

}  // namespace sqkd
