#include <ostream>
#include <stdexcept>

#include "sqkd/crypto.hpp"
#include "sqkd/harness.hpp"

namespace sqkd {

bool PaperExampleReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) return false;
  }
  return !checks.empty();
}

PaperExampleReport replay_paper_example() {
  ProtocolParams params;
  params.n = 2;
  params.variant = Variant::Original;
  params.tau = 0.0;

  MasterKeys keys;
  keys.k1 = BitSeq::from_string("0101");  // one I and one H pair on each side of the split
  keys.k2 = BitSeq::from_string("1100");  // first two positions are check bits
  keys.kh = BitSeq(kMinSeedBits);

  const AdversaryStrategy eve = modification_attack();
  const BitSeq wanted_m_a = BitSeq::from_string("0011");

  PaperExampleReport report;
  bool found = false;
  for (std::uint64_t seed = 0; seed < 4096; ++seed) {
    SessionOutcome o = run_session_with_keys(params, keys, eve, seed);
    if (o.m_a == wanted_m_a) {
      report.seed = seed;
      report.outcome = std::move(o);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("paper example: no measurement stream produced M_A = 0011");

  const SessionOutcome& o = report.outcome;
  report.alice_partition = partition_by_k2(o.m_a, keys.k2);
  report.bob_partition = partition_by_k2(o.m_b, keys.k2);
  const Partition& pa = report.alice_partition;
  const Partition& pb = report.bob_partition;
  auto pass = [](bool b) { return std::string(b ? "pass" : "fail"); };

  report.checks = {
      {"M_A", "0011", o.m_a.to_string()},
      {"M_B", "1100", o.m_b.to_string()},
      {"C_A", "00", pa.check.to_string()},
      {"C_B", "11", pb.check.to_string()},
      {"C_A^O", "0", pa.check_odd.to_string()},
      {"C_A^E", "0", pa.check_even.to_string()},
      {"C_B^O", "1", pb.check_odd.to_string()},
      {"C_B^E", "1", pb.check_even.to_string()},
      {"Alice announces C_A^E", "0", o.check.alice_sent.to_string()},
      {"Bob announces C_B^O", "1", o.check.bob_sent.to_string()},
      {"Bob receives C_A^E'", "1", o.check.bob_received.to_string()},
      {"Alice receives C_B^O'", "0", o.check.alice_received.to_string()},
      {"Alice check (C_B^O' vs C_A^O)", "pass", pass(o.check.alice_pass)},
      {"Bob check (C_A^E' vs C_B^E)", "pass", pass(o.check.bob_pass)},
      {"aborted", "no", o.aborted ? "yes" : "no"},
      {"RK_A", "11", o.rk_a.to_string()},
      {"RK_B", "00", o.rk_b.to_string()},
  };
  return report;
}

void print_paper_example(const PaperExampleReport& report, std::ostream& os) {
  const SessionOutcome& o = report.outcome;
  os << "modification attack on the original protocol, 4 pairs\n";
  os << "  K1 = " << o.keys.k1.to_string() << "  K2 = " << o.keys.k2.to_string()
     << "  measurement seed = " << report.seed << "\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.ok() ? "ok  " : "FAIL") << "  " << c.name << " = " << c.actual;
    if (!c.ok()) os << " (expected " << c.expected << ")";
    os << "\n";
  }
  if (o.sk_a && o.sk_b) {
    os << "  SK_A = " << o.sk_a->to_string() << "  SK_B = " << o.sk_b->to_string() << "\n";
  }
  os << (report.ok() ? "paper example reproduced\n" : "paper example MISMATCH\n");
}

}  // namespace sqkd
