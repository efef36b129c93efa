// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "sqkd/crypto.hpp"
#include "sqkd/harness.hpp"
#include "sqkd/qsim.hpp"
#include "sqkd/search.hpp"

namespace {

using namespace sqkd;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass;
  std::string detail;
};

RunConfig batch(Variant v, AttackKind a, std::size_t n, std::uint64_t trials) {
  RunConfig c;
  c.protocol = v;
  c.attack = a;
  c.n = n;
  c.trials = trials;
  c.seed = 0x5eed;
  c.tau = 0.0;
  c.hash_bits = 64;
  return c;
}

std::string rates(const AggregateReport& r) {
  std::ostringstream os;
  os << "detection=" << r.detection_rate << " key_match=" << r.key_match_rate
     << " complement=" << r.raw_key_complement_rate;
  return os.str();
}

Result paper_example() {
  const auto t0 = Clock::now();
  const auto report = replay_paper_example();
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "M_A=" << report.outcome.m_a.to_string() << " M_B=" << report.outcome.m_b.to_string()
     << " RK_A=" << report.outcome.rk_a.to_string() << " RK_B=" << report.outcome.rk_b.to_string()
     << " time=" << dt << "s";
  return {report.ok() && dt < 1.0, os.str()};
}

Result honest_completeness() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (Variant v : {Variant::Original, Variant::Improved}) {
    const auto r = run_batch(batch(v, AttackKind::None, 32, 1000));
    ok = ok && r.detection_rate == 0.0 && r.key_match_rate == 1.0;
    detail += variant_string(v) + ": " + rates(r) + "; ";
  }
  const double dt = seconds_since(t0);
  detail += "time=" + std::to_string(dt) + "s";
  return {ok && dt < 5.0, detail};
}

Result attack_success() {
  const auto r = run_batch(batch(Variant::Original, AttackKind::Modification, 32, 1000));
  return {r.detection_rate == 0.0 && r.raw_key_complement_rate == 1.0 && r.key_match_rate == 0.0, rates(r)};
}

Result countermeasure() {
  const auto r = run_batch(batch(Variant::Improved, AttackKind::Modification, 32, 10000));
  return {r.detection_rate == 1.0, rates(r)};
}

Result intercept_resend() {
  const auto r = run_batch(batch(Variant::Original, AttackKind::InterceptResend, 64, 2000));
  std::ostringstream os;
  os << "compared_bits=" << r.tally.compared_check_bits << " mismatch=" << r.mean_check_error_rate;
  return {r.tally.compared_check_bits >= 100000 && std::abs(r.mean_check_error_rate - 0.25) <= 0.02, os.str()};
}

std::string describe(const std::vector<AdversaryStrategy>& set) {
  std::string s = "{";
  for (const auto& a : set) s += " (" + quantum_policy_string(a.quantum) + "," + classical_policy_string(a.classical) + ")";
  return s + " }";
}

Result attack_search() {
  SearchConfig c;
  c.params.n = 16;
  c.trials = 1000;
  c.seed = 0x5eed;
  c.params.variant = Variant::Original;
  auto original = undetected_full_corruption(search_attacks(c));
  c.params.variant = Variant::Improved;
  const auto improved = undetected_full_corruption(search_attacks(c));

  const AdversaryStrategy y{QuantumPolicy::gate_all(GateName::Y), ClassicalPolicy::FlipAll};
  const AdversaryStrategy sf = modification_attack();
  const bool original_ok = original.size() == 2 && std::count(original.begin(), original.end(), y) == 1 &&
                           std::count(original.begin(), original.end(), sf) == 1;
  return {original_ok && improved.empty(), "original " + describe(original) + " improved " + describe(improved)};
}

Result quantum_core() {
  const GateName gates[] = {GateName::I, GateName::H, GateName::X, GateName::Y, GateName::Z, GateName::SpinFlip};
  bool ok = true;
  for (GateName g : gates) ok = ok && is_unitary(standard_gate(g).matrix(), 1e-12);

  Rng rng(7);
  double worst_norm = 0.0;
  for (int i = 0; i < 10000; ++i) {
    std::array<Amplitude, 4> amp;
    double norm = 0.0;
    for (auto& a : amp) {
      a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
      norm += std::norm(a);
    }
    for (auto& a : amp) a /= std::sqrt(norm);
    const auto t = apply_gate(TwoQubitState(amp), standard_gate(gates[rng.below(6)]), rng.bit() ? Qubit::A : Qubit::B);
    worst_norm = std::max(worst_norm, std::abs(t.norm_squared() - 1.0));
  }
  ok = ok && worst_norm <= 1e-12;

  long violations = 0;
  const Gate sf = standard_gate(GateName::SpinFlip);
  for (GateName u : {GateName::I, GateName::H}) {
    const Gate g = standard_gate(u);
    const auto corr = apply_gate(apply_gate(bell_phi_plus(), g, Qubit::A), g, Qubit::B);
    const auto anti = apply_gate(apply_gate(apply_gate(bell_phi_plus(), sf, Qubit::B), g, Qubit::A), g, Qubit::B);
    for (int i = 0; i < 10000; ++i) {
      auto b = measure_z(corr, Qubit::B, rng);
      violations += measure_z(b.post_state, Qubit::A, rng).outcome != b.outcome;
      auto b2 = measure_z(anti, Qubit::B, rng);
      violations += measure_z(b2.post_state, Qubit::A, rng).outcome == b2.outcome;
    }
  }
  std::ostringstream os;
  os << "max_norm_err=" << worst_norm << " violations=" << violations;
  return {ok && violations == 0, os.str()};
}

BitSeq bits_of(std::uint64_t v, std::size_t n) {
  BitSeq b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, (v >> i) & 1);
  return b;
}

Result universal_hash() {
  int worst = 0;
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t xp = x + 1; xp < 16; ++xp) {
      int collisions = 0;
      for (std::uint64_t key = 0; key < 128; ++key) {
        const ToeplitzSpec s{bits_of(key, 7), BitSeq(4), 4, 4};
        collisions += toeplitz_hash(s, bits_of(x, 4)) == toeplitz_hash(s, bits_of(xp, 4));
      }
      worst = std::max(worst, collisions);
    }
  }
  const double worst_rate = worst / 128.0;

  Rng rng(99);
  auto random_bits = [&rng](std::size_t n) {
    BitSeq b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i, rng.bit());
    return b;
  };
  int linearity_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t in_len = 1 + rng.below(64), out_len = 1 + rng.below(64);
    const ToeplitzSpec s{random_bits(in_len + out_len - 1), random_bits(out_len), in_len, out_len};
    const BitSeq x = random_bits(in_len), xp = random_bits(in_len);
    linearity_failures += (toeplitz_hash(s, x) ^ toeplitz_hash(s, xp) ^ s.mask_bits) != toeplitz_hash(s, x ^ xp);
  }
  std::ostringstream os;
  os << "worst_pair_collision=" << worst_rate << " linearity_failures=" << linearity_failures;
  return {worst_rate <= 1.0 / 16.0 && linearity_failures == 0, os.str()};
}

Result determinism() {
  auto strip = [](const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("wall_time_ms");
    return j.dump();
  };
  bool ok = true;
  for (AttackKind a : {AttackKind::None, AttackKind::Modification, AttackKind::InterceptResend}) {
    for (Variant v : {Variant::Original, Variant::Improved}) {
      const auto c = batch(v, a, 16, 500);
      const auto first = strip(render_json(run_batch(c)));
      ok = ok && first == strip(render_json(run_batch(c))) && first == strip(render_json(run_batch_serial(c)));
    }
  }
  const auto t0 = Clock::now();
  const auto big_original = run_batch(batch(Variant::Original, AttackKind::Modification, 256, 10000));
  const auto big_improved = run_batch(batch(Variant::Improved, AttackKind::None, 256, 10000));
  const double dt = seconds_since(t0);
  ok = ok && big_original.detection_rate == 0.0 && big_improved.key_match_rate == 1.0;
  return {ok && dt < 60.0, "n=256 x 10^4 trials (two batches) time=" + std::to_string(dt) + "s"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  const Criterion criteria[] = {
      {"1 paper-example replay", paper_example},
      {"2 honest completeness", honest_completeness},
      {"3 modification attack undetected on original", attack_success},
      {"4 keyed-hash countermeasure detects attack", countermeasure},
      {"5 intercept-resend mismatch 0.25 +/- 0.02", intercept_resend},
      {"6 attack search undetected family", attack_search},
      {"7 quantum-core invariants", quantum_core},
      {"8 universal-hash suite", universal_hash},
      {"9 determinism and runtime", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", c.name, r.detail.c_str());
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
