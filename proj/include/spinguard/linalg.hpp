#pragma once

// Small dense complex linear algebra for two-qubit operators.
//
// Everything here works on fixed-size square matrices (2x2 for single-qubit
// operators, 4x4 for two-qubit operators) stored row-major. The two-qubit
// basis order is |00>, |01>, |10>, |11>.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinguard {

using Complex = std::complex<double>;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  static SquareMatrix zero() { return SquareMatrix{}; }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<Complex, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * N + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * N + col];
  }

  const std::array<Complex, N * N>& entries() const { return entries_; }

  SquareMatrix& operator+=(const SquareMatrix& other) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] += other.entries_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& other) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] -= other.entries_[i];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator-(SquareMatrix a) { return a *= -1.0; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> entries_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;
using Vector4 = std::array<Complex, 4>;

template <std::size_t N>
SquareMatrix<N> mat_mul(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return a * b;
}

template <std::size_t N>
SquareMatrix<N> dagger(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(a(j, i));
  return out;
}

// Entrywise complex conjugate in the computational basis.
template <std::size_t N>
SquareMatrix<N> conjugate(const SquareMatrix<N>& a) {
  SquareMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(a(i, j));
  return out;
}

template <std::size_t N>
Complex trace(const SquareMatrix<N>& a) {
  Complex t{};
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

template <std::size_t N>
double frobenius_norm(const SquareMatrix<N>& a) {
  double sum = 0.0;
  for (const auto& e : a.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

template <std::size_t N>
double frobenius_distance(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return frobenius_norm(a - b);
}

// max_ij |a_ij - conj(a_ji)|
template <std::size_t N>
double hermiticity_defect(const SquareMatrix<N>& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
  return worst;
}

// ||a^dagger a - I||_F
template <std::size_t N>
double unitarity_defect(const SquareMatrix<N>& a) {
  return frobenius_distance(dagger(a) * a, SquareMatrix<N>::identity());
}

template <std::size_t N>
bool all_finite(const SquareMatrix<N>& a) {
  for (const auto& e : a.entries())
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b);

Vector4 apply(const Matrix4& a, const Vector4& v);

// |v><w|
Matrix4 outer(const Vector4& v, const Vector4& w);

inline constexpr double kHermitianInputTolerance = 1e-10;
inline constexpr double kEigOffDiagonalTolerance = 1e-14;
inline constexpr double kPsdClipTolerance = 1e-12;

template <std::size_t N>
struct HermitianEig {
  std::array<double, N> eigenvalues{};  // ascending
  SquareMatrix<N> eigenvectors;         // column j pairs with eigenvalues[j]
};

using HermitianEig4 = HermitianEig<4>;

// Cyclic complex Jacobi diagonalization. The input is symmetrized as
// (A + A^dagger)/2 before iterating. Throws NotHermitian when
// hermiticity_defect(a) exceeds kHermitianInputTolerance and NoConvergence
// when the off-diagonal norm does not drop below kEigOffDiagonalTolerance.
template <std::size_t N>
HermitianEig<N> hermitian_eig(const SquareMatrix<N>& a);

// V diag(f(lambda)) V^dagger
template <std::size_t N, class Fn>
SquareMatrix<N> spectral_map(const HermitianEig<N>& eig, Fn&& f) {
  const auto& v = eig.eigenvectors;
  std::array<Complex, N> fl;
  for (std::size_t j = 0; j < N; ++j) fl[j] = f(eig.eigenvalues[j]);
  SquareMatrix<N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) {
      Complex sum{};
      for (std::size_t j = 0; j < N; ++j) sum += v(r, j) * fl[j] * std::conj(v(c, j));
      out(r, c) = sum;
    }
  return out;
}

// Hermitian positive-semidefinite square root. Eigenvalues in
// [-kPsdClipTolerance, 0) are clipped to zero; anything lower throws NotPSD.
template <std::size_t N>
SquareMatrix<N> psd_sqrt(const SquareMatrix<N>& a);

// Singular values (descending) by one-sided Jacobi orthogonalization.
template <std::size_t N>
std::array<double, N> singular_values(const SquareMatrix<N>& a);

}  // namespace spinguard
