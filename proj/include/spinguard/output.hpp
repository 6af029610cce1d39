#pragma once

// CSV and JSON serialization of run results.
//
// Trajectory CSV: header `t,c_free,c_controlled`, one row per sample, doubles
// printed with 17 significant digits, empty cells for modes that were off.
// The JSON mirror is {"meta": <config echo>, "samples": [[t, c_free, c_controlled], ...]}
// with null for missing cells.

#include <ostream>
#include <string>

#include <json.hpp>

#include "spinguard/simulation.hpp"

namespace spinguard {

std::string format_real(double value);

nlohmann::json config_json(const RunConfig& config);

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
nlohmann::json trajectory_json(const Trajectory& traj);

void write_sweep_csv(const SweepResult& sweep, std::ostream& out);
nlohmann::json sweep_json(const SweepResult& sweep);

nlohmann::json verification_json(const VerificationReport& report);

}  // namespace spinguard
