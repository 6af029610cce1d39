#pragma once

// Closed-form concurrence curves for the Bell state (|01> + |10>)/sqrt(2)
// under free and pulse-controlled evolution. They serve as independent
// references for the numerical pipeline and are valid only for that initial
// state and the I (x) sigma_z pulse; see OracleGuard.

#include <string_view>

#include "spinguard/model.hpp"

namespace spinguard {

struct OracleInputs {
  double k = 0.0;       // j1 + j2
  double d = 0.0;       // DM strength
  double period = 0.0;  // pulse spacing T, needed by the controlled curves

  static OracleInputs from(const CouplingParams& params, double period = 0.0) {
    return OracleInputs{params.k(), params.d(), period};
  }

  // sqrt(k^2 + 4 d^2)
  double omega() const;
};

// Scope marker attached to every report that quotes oracle values.
struct OracleGuard {
  std::string_view initial_state = "bell-psi-plus";
  std::string_view pulse = "I (x) sigma_z";
  std::string_view note =
      "closed forms hold only for (|01>+|10>)/sqrt(2) under the I (x) sigma_z pulse";
};

inline constexpr OracleGuard kOracleGuard{};

// All of these throw DegenerateParams when k = d = 0 (the formulas are 0/0).

// sqrt(2 d^2 cos(4 omega t) + k^2 + 2 d^2) / omega
double c_free(const OracleInputs& in, double t);

// Free curve on [0, T], its mirror image cos(omega (8T - 4 tau)) on [T, 2T].
// Throws InvalidPeriod for period <= 0 and TauOutOfRange outside [0, 2T].
double c_controlled(const OracleInputs& in, double tau);

// |k| / omega
double c_free_min(const OracleInputs& in);

// The free curve evaluated at t = T. This is the true within-cycle minimum
// only while 4 omega T <= pi; see controlled_min_diagnostic.
double c_controlled_min(const OracleInputs& in);

struct ControlledMinDiagnostic {
  double formula = 0.0;    // c_controlled_min
  double grid_min = 0.0;   // min of c_controlled over the sampled cycle
  bool formula_valid = true;  // 4 omega T <= pi
};

// Samples c_controlled on `samples` + 1 evenly spaced points of [0, 2T]
// (tau = T always included).
ControlledMinDiagnostic controlled_min_diagnostic(const OracleInputs& in, int samples = 4000);

}  // namespace spinguard
