#include "spinguard/output.hpp"

#include <cstdio>

#include "spinguard/oracle.hpp"

namespace spinguard {

namespace {

using nlohmann::json;

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_cell(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

json guard_json() {
  return {{"initial_state", kOracleGuard.initial_state},
          {"pulse", kOracleGuard.pulse},
          {"note", kOracleGuard.note}};
}

}  // namespace

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json config_json(const RunConfig& config) {
  const auto& c = config.couplings;
  json meta;
  meta["couplings"] = {{"j1", c.j1()},       {"j2", c.j2()},      {"d", c.d()},
                       {"k", c.k()},         {"delta", c.delta()}, {"omega", c.omega()},
                       {"delta_completed", c.delta_completed()}};
  meta["period_T"] = config.period ? json(*config.period) : json(nullptr);
  meta["t_max"] = config.t_max;
  meta["dt"] = config.dt;

  json state = {{"label", config.initial_state.label}};
  if (const auto* psi = std::get_if<PureState>(&config.initial_state.state)) {
    json amps = json::array();
    for (const auto& a : psi->amplitudes()) amps.push_back(complex_json(a));
    state["amplitudes"] = amps;
  } else {
    json rows = json::array();
    const auto& m = std::get<DensityMatrix>(config.initial_state.state).matrix();
    for (std::size_t i = 0; i < 4; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < 4; ++j) row.push_back(complex_json(m(i, j)));
      rows.push_back(row);
    }
    state["density"] = rows;
  }
  meta["initial_state"] = state;

  json modes = json::array();
  if (config.modes.free) modes.push_back("free");
  if (config.modes.controlled) modes.push_back("controlled");
  meta["modes"] = modes;
  meta["seed"] = config.seed;
  if (config.oracle_bias != 0.0) meta["oracle_bias"] = config.oracle_bias;

  meta["conventions"] = {
      {"hbar", 1},
      {"delta_completion", c.completion_note()},
      {"basis", "|00>, |01>, |10>, |11>"},
      {"sigma_y", "[[0, -i], [i, 0]]"},
      {"pulse", "I (x) sigma_z, instantaneous"},
      {"pulse_instants", "post-pulse value reported at t = m T"},
  };
  if (config.initial_state.is_bell_preset()) meta["oracle_guard"] = guard_json();
  return meta;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  out << "t,c_free,c_controlled\n";
  for (const auto& s : traj.samples) {
    out << format_real(s.t) << ',' << optional_cell(s.c_free) << ','
        << optional_cell(s.c_controlled) << '\n';
  }
}

json trajectory_json(const Trajectory& traj) {
  json samples = json::array();
  for (const auto& s : traj.samples) {
    samples.push_back(json::array({s.t, optional_json(s.c_free), optional_json(s.c_controlled)}));
  }
  json meta = config_json(traj.config);
  meta["max_pulse_jump"] = traj.pulse_jump;
  return {{"meta", meta}, {"samples", samples}};
}

void write_sweep_csv(const SweepResult& sweep, std::ostream& out) {
  out << "period_T,c_min_numeric,c_min_oracle,abs_error\n";
  for (const auto& row : sweep.rows) {
    out << format_real(row.period) << ',' << format_real(row.c_min_numeric) << ','
        << optional_cell(row.c_min_oracle) << ',' << optional_cell(row.abs_error) << '\n';
  }
}

json sweep_json(const SweepResult& sweep) {
  json rows = json::array();
  for (const auto& row : sweep.rows) {
    rows.push_back(json::array({row.period, row.c_min_numeric, optional_json(row.c_min_oracle),
                                optional_json(row.abs_error)}));
  }
  return {{"meta", config_json(sweep.config)},
          {"columns", {"period_T", "c_min_numeric", "c_min_oracle", "abs_error"}},
          {"rows", rows}};
}

json verification_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  }
  return {{"meta", config_json(report.config)},
          {"passed", report.passed()},
          {"checks", checks},
          {"controlled_minimum",
           {{"formula", report.controlled_min_formula},
            {"grid_min", report.controlled_grid_min},
            {"formula_valid", report.controlled_min_formula_valid}}}};
}

}  // namespace spinguard
