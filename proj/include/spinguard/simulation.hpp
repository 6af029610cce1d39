#pragma once

// Trajectory simulation, T-sweeps and oracle verification driven by a
// RunConfig. These are the operations behind the CLI subcommands.

#include <optional>
#include <string>
#include <vector>

#include "spinguard/config.hpp"

namespace spinguard {

// Pre- and post-pulse concurrences must agree this closely.
inline constexpr double kPulseContinuityTolerance = 1e-11;

struct Sample {
  double t = 0.0;
  std::optional<double> c_free;
  std::optional<double> c_controlled;
};

struct Trajectory {
  RunConfig config;
  std::vector<Sample> samples;
  // Largest |C(below) - C(above)| seen at the pulse instants.
  double pulse_jump = 0.0;
};

// Times n * dt for n = 1 .. floor(t_max / dt), merged with the exact pulse
// instants m * T <= t_max when the controlled mode is on. Grid points within
// 1e-9 dt of a pulse instant are replaced by the instant itself.
std::vector<double> time_grid(const RunConfig& config);

// Throws NumericalError if a concurrence leaves [-1e-9, 1 + 1e-9] or the two
// sides of a pulse disagree by more than kPulseContinuityTolerance.
Trajectory run_simulate(const RunConfig& config);

struct SweepRow {
  double period = 0.0;
  double c_min_numeric = 0.0;
  std::optional<double> c_min_oracle;  // empty outside the oracle's scope
  std::optional<double> abs_error;
};

struct SweepResult {
  RunConfig config;
  std::vector<SweepRow> rows;  // input order
};

// One cycle per period, sampled every config.dt plus exactly at tau = T
// (post-pulse). Rows are computed concurrently. Throws ValidationError for a
// period <= 0.
SweepResult run_sweep(const RunConfig& config, const std::vector<double>& periods);

struct Check {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  RunConfig config;
  std::vector<Check> checks;
  // Informational: true within-cycle minimum of the controlled closed form
  // against the T-formula, which differ once 4 omega T > pi.
  double controlled_grid_min = 0.0;
  double controlled_min_formula = 0.0;
  bool controlled_min_formula_valid = true;

  bool passed() const;
};

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kCyclicityTolerance = 1e-10;
inline constexpr double kPathTolerance = 1e-10;
inline constexpr int kRandomSuiteSize = 200;

// Compares the numerical pipeline against the closed forms and runs the
// seeded property checks. Throws OracleGuardViolation unless the initial
// state is the Bell preset and ValidationError without a period.
VerificationReport run_verify(const RunConfig& config);

}  // namespace spinguard
