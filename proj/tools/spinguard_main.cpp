// spinguard: simulate, sweep and verify pulse-protected entanglement of a
// two-qubit Heisenberg/DM system.
//
// Exit codes: 0 success, 1 parse/validation error, 2 verification tolerance
// exceeded, 3 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinguard/errors.hpp"
#include "spinguard/output.hpp"
#include "spinguard/simulation.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kNumerical = 3 };

struct Options {
  std::string config_path;
  std::string out_path;
  std::string json_path;
  std::string periods;
  std::optional<std::uint64_t> seed;
};

std::vector<double> parse_periods(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      throw spinguard::ValidationError("--periods: cannot parse '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) {
      throw spinguard::ValidationError("--periods: cannot parse '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

spinguard::RunConfig load(const Options& opts) {
  auto cfg = spinguard::load_config(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  return cfg;
}

std::string json_mirror_path(const Options& opts, const spinguard::RunConfig& cfg,
                             const std::string& csv_path) {
  if (!opts.json_path.empty()) return opts.json_path;
  if (cfg.json_out) return *cfg.json_out;
  if (csv_path.empty()) return {};
  std::filesystem::path p(csv_path);
  p.replace_extension(".json");
  return p.string();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw spinguard::ConfigError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw spinguard::ConfigError("failed writing '" + path + "'");
}

// CSV to --out (or csv_out, or stdout) plus the JSON mirror next to it.
template <class CsvWriter>
void emit(const Options& opts, const spinguard::RunConfig& cfg, CsvWriter&& write_csv,
          const nlohmann::json& mirror) {
  std::string csv_path = opts.out_path;
  if (csv_path.empty() && cfg.csv_out) csv_path = *cfg.csv_out;
  std::ostringstream csv;
  write_csv(csv);
  if (csv_path.empty()) {
    std::cout << csv.str();
  } else {
    write_file(csv_path, csv.str());
  }
  if (const auto json_path = json_mirror_path(opts, cfg, csv_path); !json_path.empty()) {
    write_file(json_path, mirror.dump(2) + "\n");
  }
}

int run_simulate(const Options& opts) {
  const auto cfg = load(opts);
  const auto traj = spinguard::run_simulate(cfg);
  emit(opts, cfg, [&](std::ostream& os) { spinguard::write_trajectory_csv(traj, os); },
       spinguard::trajectory_json(traj));
  return kOk;
}

int run_sweep(const Options& opts) {
  const auto cfg = load(opts);
  const auto sweep = spinguard::run_sweep(cfg, parse_periods(opts.periods));
  emit(opts, cfg, [&](std::ostream& os) { spinguard::write_sweep_csv(sweep, os); },
       spinguard::sweep_json(sweep));
  return kOk;
}

int run_verify(const Options& opts) {
  const auto cfg = load(opts);
  const auto report = spinguard::run_verify(cfg);
  const std::string text = spinguard::verification_json(report).dump(2) + "\n";
  if (opts.out_path.empty()) {
    std::cout << text;
  } else {
    write_file(opts.out_path, text);
  }
  for (const auto& check : report.checks) {
    std::cerr << (check.passed ? "PASS " : "FAIL ") << check.name << " = " << check.value
              << " (tol " << check.tolerance << ")\n";
  }
  return report.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-protected entanglement simulator for a two-qubit Heisenberg/DM system"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "Run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_path, "Output path (stdout when omitted)");
    sub->add_option("--seed", opts.seed, "Seed for the randomized property checks");
  };

  auto* simulate = app.add_subcommand("simulate", "Free vs controlled concurrence trajectories");
  add_common(simulate);
  simulate->add_option("--json", opts.json_path, "JSON mirror path (default: --out with .json)");

  auto* sweep = app.add_subcommand("sweep", "Controlled-evolution minimum versus pulse period");
  add_common(sweep);
  sweep->add_option("--periods", opts.periods, "Comma-separated pulse periods T");
  sweep->add_option("--json", opts.json_path, "JSON mirror path (default: --out with .json)");

  auto* verify = app.add_subcommand("verify", "Check numerics against the closed forms");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (simulate->parsed()) return run_simulate(opts);
    if (sweep->parsed()) return run_sweep(opts);
    return run_verify(opts);
  } catch (const spinguard::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const spinguard::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
