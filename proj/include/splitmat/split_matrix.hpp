#pragma once

// Square matrices and vectors over the split-quaternions: adjoints,
// Hermiticity tests, the indefinite inner product, and the 2n x 2n complex
// embedding obtained by replacing every entry with its 2x2 representation.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "splitmat/split_quaternion.hpp"

namespace splitmat {

// Structural tag carried by a matrix.  "split_complex" means every entry
// lies in the {1, j} subalgebra (p1 = p3 = 0); the Hermitian tags add
// equality with the conjugate transpose.
enum class MatrixKind {
  general,
  split_complex,
  split_hermitian,
  split_complex_hermitian,
};

constexpr bool is_hermitian_kind(MatrixKind k) {
  return k == MatrixKind::split_hermitian || k == MatrixKind::split_complex_hermitian;
}

constexpr bool is_split_complex_kind(MatrixKind k) {
  return k == MatrixKind::split_complex || k == MatrixKind::split_complex_hermitian;
}

template <typename T>
class SplitMatrix {
 public:
  SplitMatrix() = default;
  explicit SplitMatrix(std::size_t n, MatrixKind kind = MatrixKind::general)
      : n_(n), kind_(kind), entries_(n * n) {
    if (n == 0) throw std::invalid_argument("SplitMatrix: size must be positive");
  }

  std::size_t size() const { return n_; }
  MatrixKind kind() const { return kind_; }
  void set_kind(MatrixKind k) { kind_ = k; }

  SplitQuaternion<T>& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const SplitQuaternion<T>& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * n_ + c];
  }

 private:
  std::size_t n_ = 0;
  MatrixKind kind_ = MatrixKind::general;
  std::vector<SplitQuaternion<T>> entries_;
};

template <typename T>
using SplitVector = std::vector<SplitQuaternion<T>>;

using SplitMatrixd = SplitMatrix<double>;
using SplitVectord = SplitVector<double>;

template <typename T>
SplitMatrix<T> operator+(const SplitMatrix<T>& a, const SplitMatrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix sum: size mismatch");
  SplitMatrix<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) r(i, k) = a(i, k) + b(i, k);
  return r;
}

template <typename T>
SplitMatrix<T> operator-(const SplitMatrix<T>& a, const SplitMatrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix difference: size mismatch");
  SplitMatrix<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) r(i, k) = a(i, k) - b(i, k);
  return r;
}

// Entry order in the sum matters: (AB)_{ik} = sum_m a_{im} b_{mk}.
template <typename T>
SplitMatrix<T> operator*(const SplitMatrix<T>& a, const SplitMatrix<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix product: size mismatch");
  const std::size_t n = a.size();
  SplitMatrix<T> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      SplitQuaternion<T> acc;
      for (std::size_t m = 0; m < n; ++m) acc += a(i, m) * b(m, k);
      r(i, k) = acc;
    }
  return r;
}

template <typename T>
SplitVector<T> operator*(const SplitMatrix<T>& a, const SplitVector<T>& v) {
  if (a.size() != v.size()) throw std::invalid_argument("matvec: size mismatch");
  const std::size_t n = a.size();
  SplitVector<T> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    SplitQuaternion<T> acc;
    for (std::size_t m = 0; m < n; ++m) acc += a(i, m) * v[m];
    r[i] = acc;
  }
  return r;
}

// Largest absolute component over all entries.
template <typename T>
T max_abs(const SplitMatrix<T>& m) {
  T mx = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) {
      const auto& p = m(i, k);
      using std::abs;
      mx = std::max({mx, abs(p.p0), abs(p.p1), abs(p.p2), abs(p.p3)});
    }
  return mx;
}

// Transpose with full split-quaternion conjugation of each entry; involutive.
template <typename T>
SplitMatrix<T> adjoint(const SplitMatrix<T>& m) {
  SplitMatrix<T> r(m.size(), m.kind());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) r(k, i) = conj(m(i, k));
  return r;
}

// Transpose with conjugation of the i-component only; involutive.  For a
// split-Hermitian M the product M * adjoint_i(M) has positive semidefinite
// scalar trace, which is what makes the Gaussian weights normalizable.
template <typename T>
SplitMatrix<T> adjoint_i(const SplitMatrix<T>& m) {
  SplitMatrix<T> r(m.size(), MatrixKind::general);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) r(k, i) = conj_i(m(i, k));
  return r;
}

template <typename T>
bool is_split_hermitian(const SplitMatrix<T>& m, T tol) {
  if (tol < 0) throw std::invalid_argument("is_split_hermitian: tol must be non-negative");
  return max_abs(m - adjoint(m)) <= tol;
}

// Indefinite sesquilinear form (u, v) = sum_m conj(u_m) v_m; satisfies
// (u, M v) = (adjoint(M) u, v).
template <typename T>
SplitQuaternion<T> inner_product(const SplitVector<T>& u, const SplitVector<T>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner_product: length mismatch");
  SplitQuaternion<T> acc;
  for (std::size_t m = 0; m < u.size(); ++m) acc += conj(u[m]) * v[m];
  return acc;
}

// Block embedding: block (i, k) of the 2n x 2n result is the 2x2 complex
// representation of entry (i, k).  Multiplicative on matrix products.
template <typename T>
Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic> complex_rep(
    const SplitMatrix<T>& m) {
  const std::size_t n = m.size();
  Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic> rep(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      rep.block(2 * static_cast<Eigen::Index>(i), 2 * static_cast<Eigen::Index>(k), 2, 2) =
          complex_rep(m(i, k));
  return rep;
}

}  // namespace splitmat
