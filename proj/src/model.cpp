#include "spinguard/model.hpp"

#include <cmath>

#include "spinguard/errors.hpp"

namespace spinguard {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw ValidationError(std::string("coupling '") + name + "' is not finite");
  }
}

}  // namespace

CouplingParams CouplingParams::from_exchange(double j1, double j2, double d) {
  require_finite(j1, "j1");
  require_finite(j2, "j2");
  require_finite(d, "d");
  return CouplingParams(j1, j2, d, false);
}

CouplingParams CouplingParams::from_sum(double k, double d) {
  require_finite(k, "k");
  require_finite(d, "d");
  return CouplingParams(0.5 * k, 0.5 * k, d, true);
}

double CouplingParams::omega() const { return std::hypot(k(), 2.0 * d_); }

std::string CouplingParams::completion_note() const {
  if (delta_completed_) return "only k given; completed with j1 = j2 = k/2 (delta = 0)";
  return "j1 and j2 given explicitly";
}

Matrix2 pauli(PauliAxis axis) {
  const Complex i{0.0, 1.0};
  Matrix2 m;
  switch (axis) {
    case PauliAxis::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case PauliAxis::Y:
      m(0, 1) = -i;
      m(1, 0) = i;
      break;
    case PauliAxis::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Matrix4 pauli_on(PauliAxis axis, int slot) {
  switch (slot) {
    case 1:
      return kron(pauli(axis), Matrix2::identity());
    case 2:
      return kron(Matrix2::identity(), pauli(axis));
    default:
      throw InvalidSlot("pauli_on: qubit slot must be 1 or 2, got " + std::to_string(slot));
  }
}

Matrix4 build_hamiltonian(const CouplingParams& params) {
  using enum PauliAxis;
  const Matrix4 xx = pauli_on(X, 1) * pauli_on(X, 2);
  const Matrix4 yy = pauli_on(Y, 1) * pauli_on(Y, 2);
  const Matrix4 dm = pauli_on(X, 1) * pauli_on(Y, 2) - pauli_on(Y, 1) * pauli_on(X, 2);
  return params.j1() * xx + params.j2() * yy + params.d() * dm;
}

Matrix4 pulse_operator() { return pauli_on(PauliAxis::Z, 2); }

}  // namespace spinguard
