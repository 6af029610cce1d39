#pragma once

// Two-qubit Heisenberg XY Hamiltonian with a z-axis Dzyaloshinskii-Moriya
// term, plus the Pauli building blocks and the decoupling pulse.
//
// Units: hbar = 1. Basis order |00>, |01>, |10>, |11>, sigma_y = [[0,-i],[i,0]].

#include <string>

#include "spinguard/linalg.hpp"

namespace spinguard {

enum class PauliAxis { X, Y, Z };

// Coupling coefficients j1 (xx), j2 (yy) and d (DM along z). The derived
// quantities k = j1 + j2, delta = j1 - j2 and omega = sqrt(k^2 + 4 d^2) are
// computed on demand so they can never drift from the stored values.
class CouplingParams {
 public:
  // Throws ValidationError on non-finite input.
  static CouplingParams from_exchange(double j1, double j2, double d);

  // Only the sum k is known: completes with j1 = j2 = k/2 (delta = 0).
  static CouplingParams from_sum(double k, double d);

  double j1() const { return j1_; }
  double j2() const { return j2_; }
  double d() const { return d_; }
  double k() const { return j1_ + j2_; }
  double delta() const { return j1_ - j2_; }
  double omega() const;

  // True when constructed from k alone.
  bool delta_completed() const { return delta_completed_; }
  std::string completion_note() const;

 private:
  CouplingParams(double j1, double j2, double d, bool completed)
      : j1_(j1), j2_(j2), d_(d), delta_completed_(completed) {}

  double j1_;
  double j2_;
  double d_;
  bool delta_completed_;
};

Matrix2 pauli(PauliAxis axis);

// sigma_axis (x) I for slot 1, I (x) sigma_axis for slot 2. Throws InvalidSlot.
Matrix4 pauli_on(PauliAxis axis, int slot);

// H = j1 sx sx + j2 sy sy + d (sx sy - sy sx). Explicitly
//   [[0, 0, 0, delta], [0, 0, k + 2i d, 0], [0, k - 2i d, 0, 0], [delta, 0, 0, 0]].
Matrix4 build_hamiltonian(const CouplingParams& params);

// I (x) sigma_z = diag(1, -1, 1, -1). Anticommutes with every Hamiltonian
// above: O H O = -H.
Matrix4 pulse_operator();

}  // namespace spinguard
