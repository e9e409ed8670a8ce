#pragma once

// Exact correspondence between split-complex Hermitian matrices and real
// Ginibre matrices.  For n = 2 a fixed orthogonal conjugation turns the 4x4
// real embedding into two copies of one real 2x2 block; for general n the
// same spectral doubling follows from splitting the entries into their
// symmetric and antisymmetric real parts.

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "splitmat/split_matrix.hpp"

namespace splitmat {

namespace detail {

inline void require_sc_hermitian(const SplitMatrixd& h, const char* where) {
  const double tol = 1e-12 * std::max(1.0, max_abs(h));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t k = 0; k < h.size(); ++k)
      if (std::abs(h(i, k).p1) > tol || std::abs(h(i, k).p3) > tol)
        throw std::invalid_argument(std::string(where) + ": entries must lie in the {1, j} span");
  if (!is_split_hermitian(h, tol))
    throw std::invalid_argument(std::string(where) + ": matrix must be split-Hermitian");
}

}  // namespace detail

// 4x4 real embedding of a 2x2 split-complex Hermitian matrix with diagonal
// (l1, l2) and off-diagonal delta - j gamma, in the basis ordering
//   (l1  0   d   g)
//   (0   l1  g   d)
//   (d  -g   l2  0)
//   (-g  d   0   l2).
inline Eigen::Matrix4d embed4(const SplitMatrixd& h) {
  if (h.size() != 2) throw std::invalid_argument("embed4: matrix must be 2x2");
  detail::require_sc_hermitian(h, "embed4");
  const double l1 = h(0, 0).p0, l2 = h(1, 1).p0;
  const double delta = h(0, 1).p0, gamma = -h(0, 1).p2;
  Eigen::Matrix4d e;
  e << l1, 0, delta, gamma,
       0, l1, gamma, delta,
       delta, -gamma, l2, 0,
       -gamma, delta, 0, l2;
  return e;
}

// embed4 and the entrywise embedding complex_rep use different sign
// conventions in the second basis vector of each entry block:
// embed4(H) = S * Re(complex_rep(H)) * S with this involutive sign matrix.
inline Eigen::Matrix4d embed4_basis_signs() {
  return Eigen::Vector4d(1.0, -1.0, 1.0, -1.0).asDiagonal();
}

// The fixed orthogonal matrix whose conjugation block-diagonalizes embed4.
inline Eigen::Matrix4d bridge_orthogonal() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4d o;
  o << 0, 1, 0, -1,
       0, 1, 0, 1,
       1, 0, -1, 0,
       1, 0, 1, 0;
  return r * o;
}

struct BridgeResult {
  Eigen::Matrix2d ginibre_block;
  double residual;  // max-abs defect of the block-diagonalization identity
};

// Conjugates embed4(H) by the fixed orthogonal matrix and reads off the real
// 2x2 block [[a, b], [d, c]] with a = l2, b = delta - gamma, d = delta + gamma,
// c = l1; the result appears twice (transposed once), so H is spectrally
// equivalent to two copies of the block.
inline BridgeResult ginibre_equivalent(const SplitMatrixd& h) {
  const Eigen::Matrix4d e = embed4(h);
  const Eigen::Matrix4d o = bridge_orthogonal();
  const Eigen::Matrix4d t = o.transpose() * e * o;

  const double l1 = h(0, 0).p0, l2 = h(1, 1).p0;
  const double delta = h(0, 1).p0, gamma = -h(0, 1).p2;
  const double a = l2, b = delta - gamma, d = delta + gamma, c = l1;
  Eigen::Matrix4d expected;
  expected << a, b, 0, 0,
              d, c, 0, 0,
              0, 0, a, d,
              0, 0, b, c;
  const double residual = (t - expected).cwiseAbs().maxCoeff();
  if (residual > 1e-10)
    throw std::runtime_error("ginibre_equivalent: block-diagonalization identity violated");
  BridgeResult r;
  r.ginibre_block << a, b, d, c;
  r.residual = residual;
  return r;
}

struct BlockSimilarity {
  Eigen::MatrixXd block;  // X + Y, the n x n real equivalent
  double residual;        // defect of the orthogonal block-diagonalization
};

// n x n form of the correspondence: write H = X + jY (X symmetric, Y
// antisymmetric), then the 2n x 2n real matrix [[X, Y], [Y, X]] is
// orthogonally similar to diag(X + Y, X - Y) via (1/sqrt(2)) [[I, I], [I, -I]],
// and X - Y is the transpose of X + Y.
inline BlockSimilarity block_similarity(const SplitMatrixd& h) {
  detail::require_sc_hermitian(h, "block_similarity");
  const Eigen::Index n = static_cast<Eigen::Index>(h.size());
  Eigen::MatrixXd x(n, n), y(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      x(i, k) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(k)).p0;
      y(i, k) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(k)).p2;
    }

  Eigen::MatrixXd embedding(2 * n, 2 * n);
  embedding << x, y, y, x;
  Eigen::MatrixXd q(2 * n, 2 * n);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  q << id, id, id, -id;
  q *= 1.0 / std::sqrt(2.0);

  const Eigen::MatrixXd a = x + y;
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  expected.topLeftCorner(n, n) = a;
  expected.bottomRightCorner(n, n) = a.transpose();
  const double residual =
      (q.transpose() * embedding * q - expected).cwiseAbs().maxCoeff();
  return {a, residual};
}

}  // namespace splitmat
