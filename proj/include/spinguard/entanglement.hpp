#pragma once

// Wootters concurrence of two-qubit states.

#include <array>

#include "spinguard/dynamics.hpp"
#include "spinguard/linalg.hpp"

namespace spinguard {

// Raw concurrences may overshoot 1 by this much before being clamped; beyond
// it the functions below throw NumericalError.
inline constexpr double kConcurrenceSlack = 1e-9;

// S = sigma_y (x) sigma_y = antidiag(-1, 1, 1, -1).
Matrix4 spin_flip_operator();

// rho~ = S rho* S, with * the entrywise conjugate in the computational basis.
Matrix4 spin_flip(const DensityMatrix& rho);

// Eigenvalues mu_i of rho rho~, descending and nonnegative.
struct ConcurrenceSpectrum {
  std::array<double, 4> mu{};
};

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho);

// max(0, 2 max sqrt(mu_i) - sum sqrt(mu_i))
double concurrence_mixed(const DensityMatrix& rho);

// |<psi| S |psi*>|. Throws NotNormalized.
double concurrence_pure(const PureState& psi);

}  // namespace spinguard
