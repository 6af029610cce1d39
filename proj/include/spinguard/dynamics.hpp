#pragma once

// Free, cyclic and controlled propagators for the pulsed two-qubit system,
// and the state types they act on.

#include <cstdint>
#include <optional>

#include "spinguard/linalg.hpp"

namespace spinguard {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kBoundarySnap = 1e-12;

class PureState {
 public:
  // Throws NotNormalized unless sum |a_i|^2 = 1 within kNormTolerance.
  static PureState from_amplitudes(const Vector4& amplitudes);

  // Rescales any nonzero vector to unit norm. Throws NotNormalized for zero.
  static PureState normalized(const Vector4& amplitudes);

  // (|01> + |10>) / sqrt(2)
  static PureState bell_psi_plus();
  static PureState basis(std::size_t index);

  const Vector4& amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  explicit PureState(const Vector4& a) : amplitudes_(a) {}
  friend PureState evolve_pure(const Matrix4& u, const PureState& psi);

  Vector4 amplitudes_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity and unit trace (1e-12) and eigenvalues >= -1e-10.
  // Throws InvalidState.
  static DensityMatrix from_matrix(const Matrix4& m);
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed();

  const Matrix4& matrix() const { return matrix_; }
  double purity() const;

 private:
  explicit DensityMatrix(const Matrix4& m) : matrix_(m) {}
  friend DensityMatrix evolve_density(const Matrix4& u, const DensityMatrix& rho);

  Matrix4 matrix_;
};

// Which one-sided limit to take at a pulse instant.
enum class PulseSide { Below, Above };

// t = tau + 2 k T with k = floor(t / 2T) and tau in [0, 2T).
struct ControlClock {
  double t = 0.0;
  double period = 0.0;
  std::uint64_t k = 0;
  double tau = 0.0;
};

// Times within kBoundarySnap (relative) of a cycle end roll over to tau = 0
// of the next cycle; times that close to a mid-cycle pulse land exactly on
// tau = T. Throws InvalidPeriod for period <= 0 and DomainError for t < 0.
ControlClock reduce_time(double t, double period);

// Eigendecomposition of H plus, when a period is given, the once-per-run
// factors U_f(T), O U_f(T) and U_f(T) O U_f(T) of the pulsed schedule.
// Immutable after construction, so it may be shared between threads.
class PropagatorCache {
 public:
  explicit PropagatorCache(const Matrix4& hamiltonian);
  PropagatorCache(const Matrix4& hamiltonian, double period);

  // e^{-iHt}; negative t gives the inverse.
  Matrix4 free(double t) const;

  // One cycle of the pulsed schedule at offset tau in [0, 2T]. side selects
  // the pre- or post-pulse value at tau = T and tau = 2T and is ignored
  // elsewhere. Throws TauOutOfRange.
  Matrix4 cyclic(double tau, PulseSide side) const;

  // Cyclic propagator at the reduced offset of t, post-pulse at boundaries.
  Matrix4 controlled(double t) const;

  const HermitianEig4& spectrum() const { return eig_; }
  std::optional<double> period() const { return period_; }

 private:
  const Matrix4& checked_period_factor(const std::optional<Matrix4>& m) const;

  HermitianEig4 eig_;
  std::optional<double> period_;
  std::optional<Matrix4> free_at_period_;
  std::optional<Matrix4> pulsed_at_period_;     // O U_f(T)
  std::optional<Matrix4> full_cycle_pre_pulse_;  // U_f(T) O U_f(T)
};

Matrix4 free_propagator(const Matrix4& h, double t);
Matrix4 cyclic_propagator(const Matrix4& h, double period, double tau, PulseSide side);
Matrix4 controlled_propagator(const Matrix4& h, double period, double t);

// Throws NotUnitary if ||u^dagger u - I||_F > kUnitaryTolerance.
PureState evolve_pure(const Matrix4& u, const PureState& psi);
DensityMatrix evolve_density(const Matrix4& u, const DensityMatrix& rho);

}  // namespace spinguard
