#include "spinguard/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "spinguard/errors.hpp"
#include "spinguard/model.hpp"

namespace spinguard {

namespace {

// sqrt(mu_i), descending. These are the singular values of sqrt(rho) sqrt(rho~),
// since (sqrt(rho) sqrt(rho~)) (sqrt(rho) sqrt(rho~))^dagger = sqrt(rho) rho~ sqrt(rho),
// which shares its spectrum with rho rho~. Taking singular values of the factor
// avoids square-rooting eigenvalue noise: on pure states the Hermitian product
// has three zero eigenvalues and their rounding error (~1e-16) would otherwise
// surface as ~1e-8 in the concurrence.
std::array<double, 4> root_spectrum(const DensityMatrix& rho) {
  const Matrix4 root = psd_sqrt(rho.matrix());
  const Matrix4 root_flipped = psd_sqrt(spin_flip(rho));
  return singular_values(root * root_flipped);
}

double checked_concurrence(double raw) {
  if (!(raw <= 1.0 + kConcurrenceSlack)) {
    throw NumericalError("concurrence " + std::to_string(raw) + " exceeds 1");
  }
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace

Matrix4 spin_flip_operator() {
  return pauli_on(PauliAxis::Y, 1) * pauli_on(PauliAxis::Y, 2);
}

Matrix4 spin_flip(const DensityMatrix& rho) {
  const Matrix4 s = spin_flip_operator();
  return s * conjugate(rho.matrix()) * s;
}

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix& rho) {
  const auto roots = root_spectrum(rho);
  ConcurrenceSpectrum out;
  for (std::size_t i = 0; i < 4; ++i) out.mu[i] = roots[i] * roots[i];
  return out;
}

double concurrence_mixed(const DensityMatrix& rho) {
  const auto roots = root_spectrum(rho);
  return checked_concurrence(roots[0] - roots[1] - roots[2] - roots[3]);
}

double concurrence_pure(const PureState& psi) {
  const auto& a = psi.amplitudes();
  double n2 = 0.0;
  for (const auto& x : a) n2 += std::norm(x);
  if (std::abs(n2 - 1.0) > kNormTolerance) {
    throw NotNormalized("concurrence_pure: norm^2 is " + std::to_string(n2));
  }
  const Matrix4 s = spin_flip_operator();
  Complex sum{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) sum += a[i] * s(i, j) * a[j];
  return checked_concurrence(std::abs(sum));
}

}  // namespace spinguard
