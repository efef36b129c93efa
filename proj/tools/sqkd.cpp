// sqkd: Monte-Carlo harness for the semi-quantum key distribution lab.
//
//   sqkd run --protocol original --attack modification --n 32 --trials 1000
//   sqkd search --protocol improved --n 16 --trials 1000
//   sqkd paper-example
//
// Exit status: 0 success, 1 usage error, 2 paper-example mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "sqkd/harness.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kAssertionFailure = 2;

struct CliOptions {
  std::string protocol = "original";
  std::string attack = "none";
  std::string strategy_file;
  std::size_t n = 32;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  double tau = 0.0;
  std::size_t hash_bits = 64;
  std::string pa_bits = "auto";
  bool balanced_k2 = false;
  std::string format = "json";
  std::string out;
};

void add_common_options(CLI::App* cmd, CliOptions& o, bool with_attack) {
  cmd->add_option("--protocol", o.protocol, "original | improved");
  if (with_attack) {
    cmd->add_option("--attack", o.attack, "none | modification | intercept-resend | custom");
    cmd->add_option("--strategy-file", o.strategy_file, "JSON strategy for --attack custom");
  }
  cmd->add_option("--n", o.n, "pair count (the protocol uses 2n pairs)");
  cmd->add_option("--trials", o.trials, "independent sessions");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--tau", o.tau, "check-bit error threshold (original variant)");
  cmd->add_option("--hash-bits", o.hash_bits, "digest length L (improved variant)");
  cmd->add_option("--pa-bits", o.pa_bits, "session key length or 'auto'");
  cmd->add_flag("--balanced-k2", o.balanced_k2, "force exactly n check positions");
  cmd->add_option("--format", o.format, "json | csv");
  cmd->add_option("--out", o.out, "output path (default: stdout)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("strategy_file: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sqkd::RunConfig to_config(const CliOptions& o) {
  sqkd::RunConfig c;
  c.protocol = sqkd::parse_variant(o.protocol);
  c.attack = sqkd::parse_attack(o.attack);
  if (c.attack == sqkd::AttackKind::Custom) {
    if (o.strategy_file.empty()) throw std::invalid_argument("strategy_file: required with --attack custom");
    c.custom_strategy = sqkd::parse_strategy_json(read_file(o.strategy_file));
  }
  c.n = o.n;
  c.trials = o.trials;
  c.seed = o.seed;
  c.tau = o.tau;
  c.hash_bits = o.hash_bits;
  if (o.pa_bits != "auto") {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(o.pa_bits, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != o.pa_bits.size() || o.pa_bits.empty() || o.pa_bits[0] == '-') {
      throw std::invalid_argument("pa_bits: expected an integer or 'auto'");
    }
    c.pa_bits = static_cast<std::size_t>(v);
  }
  c.balanced_k2 = o.balanced_k2;
  if (o.format == "json") {
    c.format = sqkd::OutputFormat::Json;
  } else if (o.format == "csv") {
    c.format = sqkd::OutputFormat::Csv;
  } else {
    throw std::invalid_argument("format: expected json or csv");
  }
  c.output_path = o.out;
  c.validate();
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-quantum key distribution attack lab"};
  app.require_subcommand(1);

  CliOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "run a Monte-Carlo batch of sessions");
  add_common_options(run, run_opts, true);

  CliOptions search_opts;
  CLI::App* search = app.add_subcommand("search", "sweep gate x classical tampering strategies");
  add_common_options(search, search_opts, false);

  app.add_subcommand("paper-example", "replay the four-pair modification attack example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (run->parsed()) {
      const sqkd::RunConfig config = to_config(run_opts);
      const sqkd::AggregateReport report = sqkd::run_batch(config);
      emit(config.format == sqkd::OutputFormat::Json ? sqkd::render_json(report) : sqkd::render_csv(report),
           config.output_path);
      return 0;
    }
    if (search->parsed()) {
      const sqkd::RunConfig config = to_config(search_opts);
      const auto results = sqkd::search_attacks(sqkd::search_config_from(config));
      emit(config.format == sqkd::OutputFormat::Json ? sqkd::render_search_json(config, results)
                                                     : sqkd::render_search_csv(results),
           config.output_path);
      return 0;
    }
    const sqkd::PaperExampleReport report = sqkd::replay_paper_example();
    sqkd::print_paper_example(report, std::cout);
    return report.ok() ? 0 : kAssertionFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kAssertionFailure;
  }
}
