#include "sqkd/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sqkd/crypto.hpp"

namespace sqkd {
namespace {

BitSeq random_bits(std::size_t n, Rng& rng) {
  BitSeq out(n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, rng.bit());
  return out;
}

// Exactly `ones` set positions out of `length`, by Fisher-Yates.
BitSeq balanced_bits(std::size_t length, std::size_t ones, Rng& rng) {
  std::vector<std::uint8_t> v(length, 0);
  std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(ones), 1);
  for (std::size_t i = length; i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
  BitSeq out(length);
  for (std::size_t i = 0; i < length; ++i) out.set(i, v[i] != 0);
  return out;
}

bool within_threshold(std::size_t mismatches, std::size_t compared, double tau) {
  if (compared == 0) return true;
  return static_cast<double>(mismatches) / static_cast<double>(compared) <= tau;
}

}  // namespace

void MasterKeys::validate(std::size_t n) const {
  if (k1.size() != 2 * n || k2.size() != 2 * n) {
    throw std::invalid_argument("MasterKeys: k1 and k2 must both have length 2n");
  }
}

MasterKeys generate_master_keys(std::size_t n, std::size_t kh_bits, Rng& rng, bool balanced_k2) {
  if (n == 0) throw std::invalid_argument("generate_master_keys: n must be at least 1");
  MasterKeys keys;
  keys.k1 = random_bits(2 * n, rng);
  keys.k2 = balanced_k2 ? balanced_bits(2 * n, n, rng) : random_bits(2 * n, rng);
  keys.kh = random_bits(kh_bits, rng);
  return keys;
}

Gate classical_gate(ClassicalOp op) {
  return standard_gate(op == ClassicalOp::Hadamard ? GateName::H : GateName::I);
}

PreparedPairs alice_prepare(const MasterKeys& keys, std::size_t n) {
  keys.validate(n);
  const Gate identity = standard_gate(GateName::I);
  const Gate hadamard = standard_gate(GateName::H);
  PreparedPairs out;
  out.pairs.reserve(2 * n);
  out.in_flight.reserve(2 * n);
  const TwoQubitState phi = bell_phi_plus();
  for (std::size_t i = 0; i < 2 * n; ++i) {
    out.pairs.push_back(apply_gate(phi, keys.k1[i] ? hadamard : identity, Qubit::A));
    out.in_flight.push_back(QubitRef{i});
  }
  return out;
}

BitSeq bob_receive_measure(const MasterKeys& keys, std::vector<TwoQubitState>& pairs,
                           std::span<const QubitRef> delivered, Rng& bob_rng) {
  if (delivered.size() != keys.k1.size()) {
    throw ProtocolError(Party::Bob, "Bob received " + std::to_string(delivered.size()) + " qubits, expected " +
                                        std::to_string(keys.k1.size()));
  }
  const Gate ops[2] = {classical_gate(ClassicalOp::Identity), classical_gate(ClassicalOp::Hadamard)};
  BitSeq m_b(delivered.size());
  for (std::size_t i = 0; i < delivered.size(); ++i) {
    auto& pair = pairs.at(delivered[i].pair);
    const ClassicalOp op = op_for_key_bit(keys.k1[i]);
    pair = apply_gate(pair, ops[op == ClassicalOp::Hadamard ? 1 : 0], Qubit::B);
    auto rec = measure_z(pair, Qubit::B, bob_rng);
    pair = rec.post_state;
    m_b.set(i, rec.outcome != 0);
  }
  return m_b;
}

BitSeq alice_measure(std::vector<TwoQubitState>& pairs, Rng& alice_rng) {
  BitSeq m_a(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto rec = measure_z(pairs[i], Qubit::A, alice_rng);
    pairs[i] = rec.post_state;
    m_a.set(i, rec.outcome != 0);
  }
  return m_a;
}

Partition partition_by_k2(const BitSeq& m, const BitSeq& k2) {
  if (m.size() != k2.size()) throw std::invalid_argument("partition_by_k2: length mismatch");
  Partition p;
  p.positions.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (k2[i] == 0) {
      p.positions.push_back({Partition::Dest::Raw, p.raw.size()});
      p.raw.push_back(m[i]);
    } else {
      p.positions.push_back({Partition::Dest::Check, p.check.size()});
      // check index c (0-based) is 1-based position c + 1
      (p.check.size() % 2 == 0 ? p.check_odd : p.check_even).push_back(m[i]);
      p.check.push_back(m[i]);
    }
  }
  return p;
}

BitSeq reassemble(const Partition& p) {
  BitSeq m(p.positions.size());
  for (std::size_t i = 0; i < p.positions.size(); ++i) {
    const auto& slot = p.positions[i];
    m.set(i, (slot.dest == Partition::Dest::Raw ? p.raw : p.check).at(slot.index));
  }
  return m;
}

CheckReport exchange_and_check_original(const Partition& alice, const Partition& bob, double tau,
                                        ClassicalPolicy channel) {
  CheckReport r;
  r.alice_sent = alice.check_even;
  r.bob_sent = bob.check_odd;
  r.bob_received = tap_classical(channel, r.alice_sent);
  r.alice_received = tap_classical(channel, r.bob_sent);

  if (r.alice_received.size() != alice.check_odd.size()) {
    throw ProtocolError(Party::Alice, "announced odd check bits have the wrong length");
  }
  if (r.bob_received.size() != bob.check_even.size()) {
    throw ProtocolError(Party::Bob, "announced even check bits have the wrong length");
  }

  r.compared_alice = alice.check_odd.size();
  r.compared_bob = bob.check_even.size();
  r.mismatches_alice = hamming_distance(r.alice_received, alice.check_odd);
  r.mismatches_bob = hamming_distance(r.bob_received, bob.check_even);
  r.vacuous_alice = r.compared_alice == 0;
  r.vacuous_bob = r.compared_bob == 0;
  r.alice_pass = within_threshold(r.mismatches_alice, r.compared_alice, tau);
  r.bob_pass = within_threshold(r.mismatches_bob, r.compared_bob, tau);
  return r;
}

BitSeq check_digest(const BitSeq& kh, std::uint8_t direction_tag, const BitSeq& half, std::size_t out_len) {
  BitSeq input;
  input.reserve(half.size() + 1);
  input.push_back(direction_tag != 0);
  for (auto b : half.bits()) input.push_back(b != 0);
  return toeplitz_hash(derive_hash_spec(kh, input.size(), out_len), input);
}

CheckReport exchange_and_check_improved(const Partition& alice, const Partition& bob, const BitSeq& kh,
                                        std::size_t out_len, ClassicalPolicy channel) {
  CheckReport r;
  if (!alice.check_even.empty()) r.alice_sent = check_digest(kh, kAliceToBobTag, alice.check_even, out_len);
  if (!bob.check_odd.empty()) r.bob_sent = check_digest(kh, kBobToAliceTag, bob.check_odd, out_len);
  r.bob_received = tap_classical(channel, r.alice_sent);
  r.alice_received = tap_classical(channel, r.bob_sent);

  // Alice: h(C_B^O) received vs h(C_A^O).
  r.vacuous_alice = alice.check_odd.empty();
  if (r.vacuous_alice) {
    if (!r.alice_received.empty()) throw ProtocolError(Party::Alice, "unexpected digest for an empty check half");
    r.alice_pass = true;
  } else {
    if (r.alice_received.size() != out_len) throw ProtocolError(Party::Alice, "digest has the wrong length");
    const BitSeq own = check_digest(kh, kBobToAliceTag, alice.check_odd, out_len);
    r.compared_alice = out_len;
    r.mismatches_alice = hamming_distance(own, r.alice_received);
    r.alice_pass = r.mismatches_alice == 0;
  }

  // Bob: h(C_A^E) received vs h(C_B^E).
  r.vacuous_bob = bob.check_even.empty();
  if (r.vacuous_bob) {
    if (!r.bob_received.empty()) throw ProtocolError(Party::Bob, "unexpected digest for an empty check half");
    r.bob_pass = true;
  } else {
    if (r.bob_received.size() != out_len) throw ProtocolError(Party::Bob, "digest has the wrong length");
    const BitSeq own = check_digest(kh, kAliceToBobTag, bob.check_even, out_len);
    r.compared_bob = out_len;
    r.mismatches_bob = hamming_distance(own, r.bob_received);
    r.bob_pass = r.mismatches_bob == 0;
  }
  return r;
}

void ProtocolParams::validate() const {
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (!(tau >= 0.0 && tau < 1.0)) throw std::invalid_argument("tau: must lie in [0, 1)");
  if (hash_bits < 1) throw std::invalid_argument("hash_bits: must be at least 1");
  if (pa_bits && *pa_bits < 1) throw std::invalid_argument("pa_bits: must be at least 1 or auto");
  if (kh_bits < kMinSeedBits) throw std::invalid_argument("kh_bits: must be at least 128");
}

SessionOutcome run_session(const ProtocolParams& params, const AdversaryStrategy& adversary, std::uint64_t seed) {
  params.validate();
  Rng key_rng(derive_seed(seed, static_cast<std::uint64_t>(Stream::Keys)));
  const MasterKeys keys = generate_master_keys(params.n, params.kh_bits, key_rng, params.balanced_k2);
  return run_session_with_keys(params, keys, adversary, seed);
}

SessionOutcome run_session_with_keys(const ProtocolParams& params, const MasterKeys& keys,
                                     const AdversaryStrategy& adversary, std::uint64_t seed) {
  params.validate();
  keys.validate(params.n);
  if (params.variant == Variant::Improved && keys.kh.size() < kMinSeedBits) {
    throw std::invalid_argument("kh: improved variant needs a hash key of at least 128 bits");
  }
  Rng alice_rng(derive_seed(seed, static_cast<std::uint64_t>(Stream::Alice)));
  Rng bob_rng(derive_seed(seed, static_cast<std::uint64_t>(Stream::Bob)));
  Rng eve_rng(derive_seed(seed, static_cast<std::uint64_t>(Stream::Eve)));

  SessionOutcome out;
  out.keys = keys;

  auto abort_with = [&out](const ProtocolError& e) {
    out.aborted = true;
    (e.detected_by() == Party::Alice ? out.detected_by_alice : out.detected_by_bob) = true;
    out.abort_reason = e.what();
    return out;
  };

  // Step 1: Bell pairs, Alice's I/H, Bob-side halves onto the channel.
  PreparedPairs lab = alice_prepare(keys, params.n);
  std::vector<QubitRef> delivered;
  delivered.reserve(lab.in_flight.size());
  for (const QubitRef& q : lab.in_flight) {
    lab.pairs[q.pair] = tap_quantum(adversary.quantum, lab.pairs[q.pair], eve_rng);
    delivered.push_back(q);
  }

  // Step 2: Bob, then the done-notice.
  try {
    out.m_b = bob_receive_measure(keys, lab.pairs, delivered, bob_rng);
  } catch (const ProtocolError& e) {
    return abort_with(e);
  }
  out.done_notice = true;

  // Step 3
  out.m_a = alice_measure(lab.pairs, alice_rng);

  // Steps 4-5
  const Partition pa = partition_by_k2(out.m_a, keys.k2);
  const Partition pb = partition_by_k2(out.m_b, keys.k2);
  out.rk_a = pa.raw;
  out.rk_b = pb.raw;
  try {
    out.check = params.variant == Variant::Original
                    ? exchange_and_check_original(pa, pb, params.tau, adversary.classical)
                    : exchange_and_check_improved(pa, pb, keys.kh, params.hash_bits, adversary.classical);
  } catch (const ProtocolError& e) {
    return abort_with(e);
  }
  out.check_mismatch_count_alice = out.check.mismatches_alice;
  out.check_mismatch_count_bob = out.check.mismatches_bob;
  out.compared_bits_alice = out.check.compared_alice;
  out.compared_bits_bob = out.check.compared_bob;
  out.vacuous_check = out.check.vacuous_alice || out.check.vacuous_bob;
  out.detected_by_alice = !out.check.alice_pass;
  out.detected_by_bob = !out.check.bob_pass;
  out.aborted = out.detected_by_alice || out.detected_by_bob;
  if (out.aborted) {
    out.abort_reason = "check failed";
    return out;
  }

  // Public PA seed chosen by Alice.
  out.pa_seed = BitSeq(kMinSeedBits);
  for (std::size_t i = 0; i < out.pa_seed.size(); ++i) out.pa_seed.set(i, alice_rng.bit());
  const std::size_t raw_len = out.rk_a.size();
  const std::size_t pa_len = std::min(params.pa_bits.value_or(auto_pa_length(raw_len)), raw_len);
  if (pa_len == 0) {
    out.sk_a = BitSeq{};
    out.sk_b = BitSeq{};
  } else {
    out.sk_a = privacy_amplify(out.rk_a, out.pa_seed, pa_len);
    out.sk_b = privacy_amplify(out.rk_b, out.pa_seed, pa_len);
  }
  return out;
}

}  // namespace sqkd
