#include "spinguard/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "spinguard/errors.hpp"

namespace spinguard {

namespace {

constexpr int kMaxJacobiSweeps = 100;

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p, q). J = diag-phase * Givens acting on
// columns (p, q); the update is a <- J^dagger a J and v <- v J.
template <std::size_t N>
void jacobi_rotate(SquareMatrix<N>& a, SquareMatrix<N>& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i phi}
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex e_minus = std::conj(phase);

  for (std::size_t r = 0; r < N; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = c * arp - s * e_minus * arq;
    a(r, q) = s * arp + c * e_minus * arq;
  }
  for (std::size_t r = 0; r < N; ++r) {
    const Complex apr = a(p, r);
    const Complex aqr = a(q, r);
    a(p, r) = c * apr - s * phase * aqr;
    a(q, r) = s * apr + c * phase * aqr;
  }
  for (std::size_t r = 0; r < N; ++r) {
    const Complex vrp = v(r, p);
    const Complex vrq = v(r, q);
    v(r, p) = c * vrp - s * e_minus * vrq;
    v(r, q) = s * vrp + c * e_minus * vrq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Vector4 apply(const Matrix4& a, const Vector4& v) {
  Vector4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Matrix4 outer(const Vector4& v, const Vector4& w) {
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = v[i] * std::conj(w[j]);
  return out;
}

template <std::size_t N>
HermitianEig<N> hermitian_eig(const SquareMatrix<N>& input) {
  if (!all_finite(input)) throw NotHermitian("hermitian_eig: non-finite input");
  const double defect = hermiticity_defect(input);
  if (defect > kHermitianInputTolerance) {
    throw NotHermitian("hermitian_eig: input deviates from Hermitian by " +
                       std::to_string(defect));
  }

  SquareMatrix<N> a = (input + dagger(input)) * 0.5;
  SquareMatrix<N> v = SquareMatrix<N>::identity();
  const double threshold = kEigOffDiagonalTolerance * std::max(1.0, frobenius_norm(a));

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweep++ == kMaxJacobiSweeps) {
      throw NoConvergence("hermitian_eig: off-diagonal norm stuck at " +
                          std::to_string(off_diagonal_norm(a)));
    }
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(a, v, p, q);
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEig<N> out;
  for (std::size_t j = 0; j < N; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < N; ++r) out.eigenvectors(r, j) = v(r, order[j]);
  }
  return out;
}

template <std::size_t N>
SquareMatrix<N> psd_sqrt(const SquareMatrix<N>& a) {
  const auto eig = hermitian_eig(a);
  if (eig.eigenvalues.front() < -kPsdClipTolerance) {
    throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(eig.eigenvalues.front()) +
                 " below clip tolerance");
  }
  SquareMatrix<N> root =
      spectral_map(eig, [](double lambda) { return Complex{std::sqrt(std::max(lambda, 0.0))}; });
  return (root + dagger(root)) * 0.5;
}

template <std::size_t N>
std::array<double, N> singular_values(const SquareMatrix<N>& input) {
  SquareMatrix<N> a = input;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  auto column_dot = [&](std::size_t p, std::size_t q) {
    Complex sum{};
    for (std::size_t r = 0; r < N; ++r) sum += std::conj(a(r, p)) * a(r, q);
    return sum;
  };

  for (int sweep = 0;; ++sweep) {
    if (sweep == kMaxJacobiSweeps) throw NoConvergence("singular_values: no convergence");
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double alpha = column_dot(p, p).real();
        const double beta = column_dot(q, q).real();
        const Complex gamma = column_dot(p, q);
        const double g = std::abs(gamma);
        if (g <= eps * std::sqrt(alpha * beta) || g == 0.0) continue;
        rotated = true;
        const Complex e_minus = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        double t;
        if (std::abs(zeta) > 1e150) {
          t = 0.5 / zeta;
        } else {
          t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < N; ++r) {
          const Complex ap = a(r, p);
          const Complex aq = a(r, q) * e_minus;
          a(r, p) = c * ap - s * aq;
          a(r, q) = s * ap + c * aq;
        }
      }
    }
    if (!rotated) break;
  }

  std::array<double, N> out;
  for (std::size_t j = 0; j < N; ++j) out[j] = std::sqrt(column_dot(j, j).real());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template HermitianEig<2> hermitian_eig(const SquareMatrix<2>&);
template HermitianEig<4> hermitian_eig(const SquareMatrix<4>&);
template SquareMatrix<2> psd_sqrt(const SquareMatrix<2>&);
template SquareMatrix<4> psd_sqrt(const SquareMatrix<4>&);
template std::array<double, 2> singular_values(const SquareMatrix<2>&);
template std::array<double, 4> singular_values(const SquareMatrix<4>&);

}  // namespace spinguard
