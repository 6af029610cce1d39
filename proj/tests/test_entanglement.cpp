#include <doctest.h>

#include "spinguard/entanglement.hpp"
#include "spinguard/errors.hpp"
#include "spinguard/model.hpp"
#include "test_support.hpp"

using namespace spinguard;
using namespace spinguard::testing;

namespace {

DensityMatrix projector(const PureState& psi) { return DensityMatrix::from_pure(psi); }

DensityMatrix werner(double p) {
  const Matrix4 bell = DensityMatrix::from_pure(PureState::bell_psi_plus()).matrix();
  return DensityMatrix::from_matrix(bell * p + Matrix4::identity() * ((1.0 - p) / 4.0));
}

}  // namespace

TEST_CASE("spin-flip operator") {
  const Matrix4 s = spin_flip_operator();
  Matrix4 expected;
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(s == expected);
  CHECK(s * s == Matrix4::identity());
}

TEST_CASE("spin_flip examples") {
  const auto mixed = DensityMatrix::maximally_mixed();
  CHECK(spin_flip(mixed) == mixed.matrix());

  const auto bell = projector(PureState::bell_psi_plus());
  CHECK(frobenius_distance(spin_flip(bell), bell.matrix()) < 1e-16);

  const auto flipped = spin_flip(projector(PureState::basis(0)));
  CHECK(flipped == projector(PureState::basis(3)).matrix());
}

TEST_CASE("spin_flip output is a density matrix") {
  for (int i = 0; i < 100; ++i) {
    const auto rho = DensityMatrix::from_matrix(random_density_matrix());
    CHECK_NOTHROW(DensityMatrix::from_matrix(spin_flip(rho)));
  }
}

TEST_CASE("concurrence_spectrum examples") {
  const auto bell = concurrence_spectrum(projector(PureState::bell_psi_plus()));
  CHECK(bell.mu[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 1; i < 4; ++i) CHECK(bell.mu[i] < 1e-28);

  const auto product = concurrence_spectrum(projector(PureState::basis(0)));
  for (double mu : product.mu) CHECK(mu == 0.0);

  const auto mixed = concurrence_spectrum(DensityMatrix::maximally_mixed());
  for (double mu : mixed.mu) CHECK(mu == doctest::Approx(1.0 / 16).epsilon(1e-14));
}

TEST_CASE("concurrence_spectrum agrees with the Hermitian similar matrix") {
  for (int i = 0; i < 200; ++i) {
    const auto rho = DensityMatrix::from_matrix(random_density_matrix());
    const Matrix4 root = psd_sqrt(rho.matrix());
    const auto hermitian = hermitian_eig(root * spin_flip(rho) * root).eigenvalues;
    const auto spectrum = concurrence_spectrum(rho);
    CHECK(std::is_sorted(spectrum.mu.rbegin(), spectrum.mu.rend()));
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(spectrum.mu[k] >= 0.0);
      CHECK(std::abs(spectrum.mu[k] - hermitian[3 - k]) < 1e-12);
    }
    const double sum = spectrum.mu[0] + spectrum.mu[1] + spectrum.mu[2] + spectrum.mu[3];
    CHECK(std::abs(sum - trace(rho.matrix() * spin_flip(rho)).real()) < 1e-11);
  }
}

TEST_CASE("concurrence_mixed reference values") {
  CHECK(std::abs(concurrence_mixed(projector(PureState::bell_psi_plus())) - 1.0) < 1e-12);
  CHECK(concurrence_mixed(projector(PureState::basis(0))) == 0.0);
  CHECK(concurrence_mixed(werner(0.5)) == doctest::Approx(0.25).epsilon(1e-12));
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.9, 1.0}) {
    CAPTURE(p);
    CHECK(std::abs(concurrence_mixed(werner(p)) - std::max(0.0, (3.0 * p - 1.0) / 2.0)) < 1e-10);
  }
}

TEST_CASE("concurrence_pure reference values") {
  CHECK(concurrence_pure(PureState::bell_psi_plus()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(concurrence_pure(PureState::basis(2)) == 0.0);
  for (int i = 0; i < 100; ++i) {
    const Complex a = gaussian_complex();
    const Complex b = gaussian_complex();
    const auto psi = PureState::normalized({0.0, a, b, 0.0});
    const double expected = 2.0 * std::abs(psi[1] * psi[2]);
    CHECK(concurrence_pure(psi) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(concurrence_mixed(projector(psi)) - expected) < 1e-10);
  }
}

TEST_CASE("pure states carry the normalization concurrence_pure relies on") {
  // from_amplitudes accepts within 1e-12; anything looser never becomes a
  // PureState, so the guard is exercised through a near-boundary state.
  CHECK_THROWS_AS(PureState::from_amplitudes({1.0 + 1e-9, 0.0, 0.0, 0.0}), NotNormalized);
  CHECK_NOTHROW(concurrence_pure(PureState::from_amplitudes({1.0 + 1e-13, 0.0, 0.0, 0.0})));
}

TEST_CASE("pure and mixed routes agree") {
  for (int i = 0; i < 1000; ++i) {
    const auto psi = random_pure_state();
    const double pure = concurrence_pure(psi);
    CHECK(std::abs(pure - concurrence_mixed(projector(psi))) < 1e-10);
    CHECK(std::abs(pure - pure_concurrence_formula(psi.amplitudes())) < 1e-14);
  }
}

TEST_CASE("concurrence stays in [0, 1]") {
  for (int i = 0; i < 300; ++i) {
    const double c = concurrence_mixed(DensityMatrix::from_matrix(random_density_matrix()));
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("local unitaries leave concurrence unchanged") {
  for (int i = 0; i < 500; ++i) {
    const auto psi = random_pure_state();
    const Matrix4 local = kron(random_unitary<2>(), random_unitary<2>());
    const auto moved = evolve_pure(local, psi);
    CHECK(std::abs(concurrence_pure(psi) - concurrence_pure(moved)) < 1e-9);
    CHECK(std::abs(concurrence_mixed(projector(psi)) - concurrence_mixed(projector(moved))) < 1e-9);
  }
  for (int i = 0; i < 100; ++i) {
    const auto rho = DensityMatrix::from_matrix(random_density_matrix());
    const Matrix4 local = kron(random_unitary<2>(), random_unitary<2>());
    CHECK(std::abs(concurrence_mixed(rho) - concurrence_mixed(evolve_density(local, rho))) < 1e-9);
  }
}

TEST_CASE("the pulse is a local unitary") {
  const Matrix4 o = pulse_operator();
  for (int i = 0; i < 100; ++i) {
    const auto psi = random_pure_state();
    CHECK(std::abs(concurrence_pure(psi) - concurrence_pure(evolve_pure(o, psi))) < 1e-15);
  }
}
