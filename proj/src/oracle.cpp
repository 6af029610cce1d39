#include "spinguard/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinguard/errors.hpp"

namespace spinguard {

namespace {

double checked_omega(const OracleInputs& in) {
  const double omega = in.omega();
  if (!(omega > 0.0)) {
    throw DegenerateParams("closed-form concurrence undefined for k = d = 0");
  }
  return omega;
}

void check_period(const OracleInputs& in) {
  if (!(in.period > 0.0) || !std::isfinite(in.period)) {
    throw InvalidPeriod("oracle period must be positive, got " + std::to_string(in.period));
  }
}

double curve(const OracleInputs& in, double omega, double phase) {
  const double two_d2 = 2.0 * in.d * in.d;
  const double radicand = two_d2 * std::cos(phase) + in.k * in.k + two_d2;
  return std::sqrt(std::max(radicand, 0.0)) / omega;
}

}  // namespace

double OracleInputs::omega() const { return std::hypot(k, 2.0 * d); }

double c_free(const OracleInputs& in, double t) {
  const double omega = checked_omega(in);
  return curve(in, omega, 4.0 * t * omega);
}

double c_controlled(const OracleInputs& in, double tau) {
  check_period(in);
  const double omega = checked_omega(in);
  if (!(tau >= 0.0 && tau <= 2.0 * in.period)) {
    throw TauOutOfRange("oracle tau = " + std::to_string(tau) + " outside [0, 2T]");
  }
  if (tau <= in.period) return curve(in, omega, 4.0 * tau * omega);
  return curve(in, omega, omega * (8.0 * in.period - 4.0 * tau));
}

double c_free_min(const OracleInputs& in) { return std::abs(in.k) / checked_omega(in); }

double c_controlled_min(const OracleInputs& in) {
  check_period(in);
  const double omega = checked_omega(in);
  return curve(in, omega, 4.0 * omega * in.period);
}

ControlledMinDiagnostic controlled_min_diagnostic(const OracleInputs& in, int samples) {
  samples = std::max(samples, 2);
  if (samples % 2 != 0) ++samples;
  ControlledMinDiagnostic out;
  out.formula = c_controlled_min(in);
  out.formula_valid = 4.0 * in.omega() * in.period <= std::numbers::pi;
  out.grid_min = out.formula;
  const double step = 2.0 * in.period / samples;
  for (int n = 0; n <= samples; ++n) {
    const double tau = n == samples ? 2.0 * in.period : n * step;
    out.grid_min = std::min(out.grid_min, c_controlled(in, tau));
  }
  return out;
}

}  // namespace spinguard
