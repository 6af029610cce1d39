#pragma once

// Run configuration: a flat "key: value" text format, one key per line.
//
//   # Fig-1 style run
//   k: 0.125            # or j1 and j2
//   d: 0.5
//   period_T: 0.25
//   t_max: 10
//   dt: 0.001
//   initial_state: bell-psi-plus   # | amplitudes | density
//   modes: free, controlled
//
// Explicit states use `amplitudes:` (4 entries) or `density:` (16 entries,
// row-major). An entry is a real number or a "(re,im)" pair.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "spinguard/dynamics.hpp"
#include "spinguard/model.hpp"

namespace spinguard {

struct InitialState {
  std::string label = "bell-psi-plus";
  std::variant<PureState, DensityMatrix> state = PureState::bell_psi_plus();

  bool is_bell_preset() const { return label == "bell-psi-plus"; }
  bool is_pure() const { return std::holds_alternative<PureState>(state); }
  DensityMatrix density() const;
};

struct Modes {
  bool free = true;
  bool controlled = true;
};

struct RunConfig {
  CouplingParams couplings = CouplingParams::from_sum(0.125, 0.5);
  std::optional<double> period = 0.25;
  double t_max = 10.0;
  double dt = 1e-3;
  InitialState initial_state;
  Modes modes;
  std::optional<std::string> csv_out;
  std::optional<std::string> json_out;
  std::uint64_t seed = 0;
  // Test hook: added to every oracle value in verify to prove the harness
  // can fail. Zero in any real run.
  double oracle_bias = 0.0;
};

// Throws ParseError (with the offending line) for malformed input and
// ValidationError (naming the keys) when the result breaks an invariant.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace spinguard
