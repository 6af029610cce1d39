#include "spinguard/dynamics.hpp"

#include <cmath>
#include <string>

#include "spinguard/errors.hpp"
#include "spinguard/model.hpp"

namespace spinguard {

namespace {

double norm_squared(const Vector4& v) {
  double sum = 0.0;
  for (const auto& a : v) sum += std::norm(a);
  return sum;
}

void require_unitary(const Matrix4& u, const char* where) {
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitaryTolerance)) {
    throw NotUnitary(std::string(where) + ": ||U^dagger U - I|| = " + std::to_string(defect));
  }
}

}  // namespace

PureState PureState::from_amplitudes(const Vector4& amplitudes) {
  const double n2 = norm_squared(amplitudes);
  if (!(std::abs(n2 - 1.0) <= kNormTolerance)) {
    throw NotNormalized("state norm^2 is " + std::to_string(n2));
  }
  return PureState(amplitudes);
}

PureState PureState::normalized(const Vector4& amplitudes) {
  const double n = std::sqrt(norm_squared(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) throw NotNormalized("cannot normalize a zero vector");
  Vector4 out = amplitudes;
  for (auto& a : out) a /= n;
  return PureState(out);
}

PureState PureState::bell_psi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState(Vector4{0.0, s, s, 0.0});
}

PureState PureState::basis(std::size_t index) {
  if (index >= 4) throw DomainError("basis index must be below 4");
  Vector4 v{};
  v[index] = 1.0;
  return PureState(v);
}

DensityMatrix DensityMatrix::from_matrix(const Matrix4& m) {
  if (!all_finite(m)) throw InvalidState("density matrix has non-finite entries");
  if (hermiticity_defect(m) > 1e-12) throw InvalidState("density matrix is not Hermitian");
  const Complex tr = trace(m);
  if (std::abs(tr - 1.0) > 1e-12) {
    throw InvalidState("density matrix trace is " + std::to_string(tr.real()));
  }
  const Matrix4 sym = (m + dagger(m)) * 0.5;
  const auto eig = hermitian_eig(sym);
  if (eig.eigenvalues.front() < -1e-10) {
    throw InvalidState("density matrix has eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
  return DensityMatrix(sym);
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()));
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Matrix4::identity() * 0.25); }

double DensityMatrix::purity() const { return trace(matrix_ * matrix_).real(); }

ControlClock reduce_time(double t, double period) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvalidPeriod("period must be positive, got " + std::to_string(period));
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("time must be finite and nonnegative, got " + std::to_string(t));
  }
  const double cycle = 2.0 * period;
  const double tol = kBoundarySnap * std::max(t, cycle);

  double k = std::floor(t / cycle);
  double tau = t - k * cycle;
  if (tau < 0.0) {
    k -= 1.0;
    tau += cycle;
  }
  if (cycle - tau <= tol) {
    k += 1.0;
    tau = 0.0;
  } else if (tau <= tol) {
    tau = 0.0;
  } else if (std::abs(tau - period) <= tol) {
    tau = period;
  }
  return ControlClock{t, period, static_cast<std::uint64_t>(k), tau};
}

PropagatorCache::PropagatorCache(const Matrix4& hamiltonian) : eig_(hermitian_eig(hamiltonian)) {}

PropagatorCache::PropagatorCache(const Matrix4& hamiltonian, double period)
    : PropagatorCache(hamiltonian) {
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw InvalidPeriod("period must be positive, got " + std::to_string(period));
  }
  period_ = period;
  free_at_period_ = free(period);
  pulsed_at_period_ = pulse_operator() * *free_at_period_;
  full_cycle_pre_pulse_ = *free_at_period_ * *pulsed_at_period_;
}

Matrix4 PropagatorCache::free(double t) const {
  if (t == 0.0) return Matrix4::identity();
  return spectral_map(eig_, [t](double lambda) { return std::polar(1.0, -lambda * t); });
}

const Matrix4& PropagatorCache::checked_period_factor(const std::optional<Matrix4>& m) const {
  if (!m) throw InvalidPeriod("propagator cache was built without a pulse period");
  return *m;
}

Matrix4 PropagatorCache::cyclic(double tau, PulseSide side) const {
  const Matrix4& at_period = checked_period_factor(free_at_period_);
  const double period = *period_;
  if (!(tau >= 0.0 && tau <= 2.0 * period)) {
    throw TauOutOfRange("tau = " + std::to_string(tau) + " outside [0, 2T] for T = " +
                        std::to_string(period));
  }
  if (tau == 0.0) return Matrix4::identity();
  if (tau < period) return free(tau);
  if (tau == period) return side == PulseSide::Below ? at_period : *pulsed_at_period_;
  if (tau < 2.0 * period) return free(tau - period) * *pulsed_at_period_;
  return side == PulseSide::Below ? *full_cycle_pre_pulse_ : Matrix4::identity();
}

Matrix4 PropagatorCache::controlled(double t) const {
  checked_period_factor(free_at_period_);
  const ControlClock clock = reduce_time(t, *period_);
  return cyclic(clock.tau, PulseSide::Above);
}

Matrix4 free_propagator(const Matrix4& h, double t) { return PropagatorCache(h).free(t); }

Matrix4 cyclic_propagator(const Matrix4& h, double period, double tau, PulseSide side) {
  return PropagatorCache(h, period).cyclic(tau, side);
}

Matrix4 controlled_propagator(const Matrix4& h, double period, double t) {
  return PropagatorCache(h, period).controlled(t);
}

PureState evolve_pure(const Matrix4& u, const PureState& psi) {
  require_unitary(u, "evolve_pure");
  Vector4 out = apply(u, psi.amplitudes());
  const double n2 = norm_squared(out);
  const double drift = std::abs(n2 - 1.0);
  if (drift > kUnitaryTolerance) {
    throw NotUnitary("evolve_pure: norm drifted by " + std::to_string(drift));
  }
  if (drift > 1e-14) {
    const double n = std::sqrt(n2);
    for (auto& a : out) a /= n;
  }
  return PureState(out);
}

DensityMatrix evolve_density(const Matrix4& u, const DensityMatrix& rho) {
  require_unitary(u, "evolve_density");
  const Matrix4 out = u * rho.matrix() * dagger(u);
  return DensityMatrix((out + dagger(out)) * 0.5);
}

}  // namespace spinguard
