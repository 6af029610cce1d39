#include "spinguard/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "spinguard/entanglement.hpp"
#include "spinguard/errors.hpp"
#include "spinguard/oracle.hpp"

namespace spinguard {

namespace {

struct GridPoint {
  double t;
  bool pulse;
};

std::vector<GridPoint> build_grid(const RunConfig& config) {
  const double dt = config.dt;
  const auto steps = static_cast<std::int64_t>(std::floor(config.t_max / dt + 1e-9));
  std::vector<double> pulses;
  if (config.modes.controlled && config.period) {
    const double period = *config.period;
    const auto count = static_cast<std::int64_t>(std::floor(config.t_max / period + 1e-9));
    for (std::int64_t m = 1; m <= count; ++m) pulses.push_back(static_cast<double>(m) * period);
  }

  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(steps) + pulses.size());
  const double merge = 1e-9 * dt;
  std::size_t p = 0;
  for (std::int64_t n = 1; n <= steps; ++n) {
    const double t = static_cast<double>(n) * dt;
    while (p < pulses.size() && pulses[p] < t - merge) grid.push_back({pulses[p++], true});
    if (p < pulses.size() && std::abs(pulses[p] - t) <= merge) {
      grid.push_back({pulses[p++], true});
    } else {
      grid.push_back({t, false});
    }
  }
  while (p < pulses.size()) grid.push_back({pulses[p++], true});
  return grid;
}

double concurrence_after(const Matrix4& u, const InitialState& initial) {
  if (const auto* psi = std::get_if<PureState>(&initial.state)) {
    return concurrence_pure(evolve_pure(u, *psi));
  }
  return concurrence_mixed(evolve_density(u, std::get<DensityMatrix>(initial.state)));
}

// |C(before pulse) - C(after pulse)| at a pulse instant.
double pulse_jump(const PropagatorCache& cache, double t, const InitialState& initial) {
  const ControlClock clock = reduce_time(t, *cache.period());
  const double period = clock.period;
  double tau_pulse;
  if (clock.tau == period) {
    tau_pulse = period;
  } else if (clock.tau == 0.0) {
    tau_pulse = 2.0 * period;
  } else {
    // Off-boundary after reduction; the sample is interior, nothing jumps.
    return 0.0;
  }
  const double below = concurrence_after(cache.cyclic(tau_pulse, PulseSide::Below), initial);
  const double above = concurrence_after(cache.cyclic(tau_pulse, PulseSide::Above), initial);
  return std::abs(below - above);
}

PropagatorCache make_cache(const RunConfig& config) {
  const Matrix4 h = build_hamiltonian(config.couplings);
  if (config.modes.controlled) {
    if (!config.period) throw ValidationError("controlled mode requires period_T");
    return PropagatorCache(h, *config.period);
  }
  return PropagatorCache(h);
}

SweepRow sweep_row(const RunConfig& config, const Matrix4& h, double period) {
  const PropagatorCache cache(h, period);
  SweepRow row;
  row.period = period;
  row.c_min_numeric = concurrence_after(cache.cyclic(period, PulseSide::Above), config.initial_state);
  const auto steps = static_cast<std::int64_t>(std::floor(2.0 * period / config.dt));
  for (std::int64_t n = 0; n <= steps; ++n) {
    const double tau = std::min(static_cast<double>(n) * config.dt, 2.0 * period);
    row.c_min_numeric = std::min(
        row.c_min_numeric, concurrence_after(cache.cyclic(tau, PulseSide::Above), config.initial_state));
  }
  if (config.initial_state.is_bell_preset()) {
    try {
      row.c_min_oracle = c_controlled_min(OracleInputs::from(config.couplings, period));
      row.abs_error = std::abs(row.c_min_numeric - *row.c_min_oracle);
    } catch (const DegenerateParams&) {
      // The closed form is 0/0 here; the numeric column stands alone.
    }
  }
  return row;
}

}  // namespace

std::vector<double> time_grid(const RunConfig& config) {
  std::vector<double> out;
  for (const auto& point : build_grid(config)) out.push_back(point.t);
  return out;
}

Trajectory run_simulate(const RunConfig& config) {
  const PropagatorCache cache = make_cache(config);
  Trajectory traj;
  traj.config = config;
  const auto grid = build_grid(config);
  traj.samples.reserve(grid.size());

  for (const auto& point : grid) {
    Sample sample;
    sample.t = point.t;
    if (config.modes.free) {
      sample.c_free = concurrence_after(cache.free(point.t), config.initial_state);
    }
    if (config.modes.controlled) {
      sample.c_controlled = concurrence_after(cache.controlled(point.t), config.initial_state);
      if (point.pulse) {
        const double jump = pulse_jump(cache, point.t, config.initial_state);
        traj.pulse_jump = std::max(traj.pulse_jump, jump);
        if (!(jump <= kPulseContinuityTolerance)) {
          throw NumericalError("concurrence jumps by " + std::to_string(jump) +
                               " across the pulse at t = " + std::to_string(point.t));
        }
      }
    }
    traj.samples.push_back(sample);
  }
  return traj;
}

SweepResult run_sweep(const RunConfig& config, const std::vector<double>& periods) {
  for (double period : periods) {
    if (!(period > 0.0) || !std::isfinite(period)) {
      throw ValidationError("sweep periods must be positive, got " + std::to_string(period));
    }
  }
  const Matrix4 h = build_hamiltonian(config.couplings);
  std::vector<std::future<SweepRow>> jobs;
  jobs.reserve(periods.size());
  for (double period : periods) {
    jobs.push_back(std::async(std::launch::async, [&config, &h, period] {
      return sweep_row(config, h, period);
    }));
  }
  SweepResult result;
  result.config = config;
  for (auto& job : jobs) result.rows.push_back(job.get());
  return result;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport run_verify(const RunConfig& config) {
  if (!config.initial_state.is_bell_preset()) {
    throw OracleGuardViolation("verify compares against closed forms that assume the "
                               "bell-psi-plus initial state, got '" +
                               config.initial_state.label + "'");
  }
  if (!config.period) throw ValidationError("verify requires period_T");

  const double period = *config.period;
  const double bias = config.oracle_bias;
  const Matrix4 h = build_hamiltonian(config.couplings);
  const PropagatorCache cache(h, period);
  const OracleInputs inputs = OracleInputs::from(config.couplings, period);
  const PureState bell = PureState::bell_psi_plus();

  double free_error = 0.0;
  double controlled_error = 0.0;
  double path_error = 0.0;
  double jump = 0.0;
  auto track_path = [&](const PureState& psi) {
    const double pure = concurrence_pure(psi);
    const double mixed = concurrence_mixed(DensityMatrix::from_pure(psi));
    path_error = std::max(path_error, std::abs(pure - mixed));
    return pure;
  };

  for (const auto& point : build_grid(config)) {
    const double c_free_num = track_path(evolve_pure(cache.free(point.t), bell));
    free_error = std::max(free_error, std::abs(c_free_num - (c_free(inputs, point.t) + bias)));

    const ControlClock clock = reduce_time(point.t, period);
    const double c_ctrl_num = track_path(evolve_pure(cache.cyclic(clock.tau, PulseSide::Above), bell));
    controlled_error =
        std::max(controlled_error, std::abs(c_ctrl_num - (c_controlled(inputs, clock.tau) + bias)));
    if (point.pulse) jump = std::max(jump, pulse_jump(cache, point.t, config.initial_state));
  }

  const Matrix4 o = pulse_operator();
  const Matrix4 at_period = cache.free(period);
  const double cyclicity = frobenius_distance(o * at_period * o * at_period, Matrix4::identity());

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> coupling(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss;
  double random_cyclicity = 0.0;
  double random_path = 0.0;
  for (int i = 0; i < kRandomSuiteSize; ++i) {
    const auto params = CouplingParams::from_exchange(coupling(rng), coupling(rng), coupling(rng));
    const double t = 2.0 * (1.0 - unit(rng));  // (0, 2]
    const Matrix4 u = free_propagator(build_hamiltonian(params), t);
    random_cyclicity =
        std::max(random_cyclicity, frobenius_distance(o * u * o * u, Matrix4::identity()));

    Vector4 v;
    for (auto& a : v) a = Complex{gauss(rng), gauss(rng)};
    const auto psi = PureState::normalized(v);
    random_path = std::max(random_path, std::abs(concurrence_pure(psi) -
                                                 concurrence_mixed(DensityMatrix::from_pure(psi))));
  }

  VerificationReport report;
  report.config = config;
  auto add = [&](std::string name, double value, double tol) {
    report.checks.push_back({std::move(name), value, tol, value <= tol});
  };
  add("free_vs_closed_form", free_error, kOracleTolerance);
  add("controlled_vs_closed_form", controlled_error, kOracleTolerance);

  if (inputs.omega() > 0.0) {
    const double t_floor = std::numbers::pi / (4.0 * inputs.omega());
    const double c_floor = concurrence_pure(evolve_pure(cache.free(t_floor), bell));
    add("free_floor_at_quarter_period", std::abs(c_floor - (c_free_min(inputs) + bias)),
        kOracleTolerance);
  }
  const double c_at_pulse = concurrence_pure(evolve_pure(cache.cyclic(period, PulseSide::Above), bell));
  add("controlled_floor_at_pulse", std::abs(c_at_pulse - (c_controlled_min(inputs) + bias)), 1e-10);

  add("cyclicity_residual", cyclicity, kCyclicityTolerance);
  add("cyclicity_residual_random", random_cyclicity, kCyclicityTolerance);
  add("pure_mixed_path_trajectory", path_error, kPathTolerance);
  add("pure_mixed_path_random", random_path, kPathTolerance);
  add("pulse_continuity", jump, kPulseContinuityTolerance);

  const auto diag = controlled_min_diagnostic(inputs);
  report.controlled_grid_min = diag.grid_min;
  report.controlled_min_formula = diag.formula;
  report.controlled_min_formula_valid = diag.formula_valid;
  return report;
}

}  // namespace spinguard
