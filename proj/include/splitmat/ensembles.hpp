#pragma once

// Seeded samplers for the two Gaussian split-Hermitian ensembles and the
// real Ginibre reference ensemble, together with the quadratic action that
// defines each Gaussian weight exp(-action).
//
// Entry variances follow from expanding the action in matrix components:
//   GSCE:  action = sum_m x_mm^2 + 2 sum_{m<k} (x_mk^2 + y_mk^2)
//          -> diagonal variance 1/2, off-diagonal component variance 1/4.
//   GSQE:  action = 2 sum_m L_m^2 + 4 sum_{m<k} |h_mk|_+^2   (all-component
//          squares) -> diagonal variance 1/4, off-diagonal component 1/8.
// Draw order is part of the reproducibility contract: row-major upper
// triangle including the diagonal, components in declaration order
// (p0, p2) for GSCE and (p0, p1, p2, p3) for GSQE.

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

#include "splitmat/rng.hpp"
#include "splitmat/split_matrix.hpp"
#include "splitmat/types.hpp"

namespace splitmat {

struct EnsembleConfig {
  EnsembleKind kind = EnsembleKind::gsce;
  std::size_t n = 2;
  std::size_t count = 1;
  std::uint64_t seed = 1;
  std::size_t substream_width = 1024;
};

// Split-complex Hermitian sample: real diagonal N(0, 1/2), off-diagonal
// x + j y with x, y independent N(0, 1/4).
inline SplitMatrixd sample_gsce(std::size_t n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_gsce: n must be positive");
  SplitMatrixd h(n, MatrixKind::split_complex_hermitian);
  const double diag_sd = std::sqrt(0.5);
  const double off_sd = 0.5;
  for (std::size_t m = 0; m < n; ++m) {
    h(m, m) = SplitQuaterniond(rng.normal(diag_sd), 0.0, 0.0, 0.0);
    for (std::size_t k = m + 1; k < n; ++k) {
      const double x = rng.normal(off_sd);
      const double y = rng.normal(off_sd);
      h(m, k) = SplitQuaterniond(x, 0.0, y, 0.0);
      h(k, m) = conj(h(m, k));
    }
  }
  return h;
}

// Split-Hermitian sample: real diagonal N(0, 1/4), off-diagonal entries with
// all four components independent N(0, 1/8).
inline SplitMatrixd sample_gsqe(std::size_t n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_gsqe: n must be positive");
  SplitMatrixd h(n, MatrixKind::split_hermitian);
  const double diag_sd = 0.5;
  const double off_sd = std::sqrt(0.125);
  for (std::size_t m = 0; m < n; ++m) {
    h(m, m) = SplitQuaterniond(rng.normal(diag_sd), 0.0, 0.0, 0.0);
    for (std::size_t k = m + 1; k < n; ++k) {
      const double p0 = rng.normal(off_sd);
      const double p1 = rng.normal(off_sd);
      const double p2 = rng.normal(off_sd);
      const double p3 = rng.normal(off_sd);
      h(m, k) = SplitQuaterniond(p0, p1, p2, p3);
      h(k, m) = conj(h(m, k));
    }
  }
  return h;
}

// Real matrix with all n^2 entries independent N(0, sigma^2), drawn in
// row-major order.
inline Eigen::MatrixXd sample_real_ginibre(std::size_t n, double sigma, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_real_ginibre: n must be positive");
  if (!(sigma > 0)) throw std::invalid_argument("sample_real_ginibre: sigma must be positive");
  Eigen::MatrixXd a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.normal(sigma);
  return a;
}

// Scalar part of the Gaussian trace form.  For GSCE this is
// tr(H H^T) = sum_{m,k} scalar((h_mk)^2); for GSQE it is
// tr(H H^I + H^I H) = 2 sum_{m,k} |h_mk|_+^2 with the all-component square.
// Both are non-negative for Hermitian input of the matching kind.
inline double gaussian_action(const SplitMatrixd& m, EnsembleKind kind) {
  const double tol = 1e-9 * std::max(1.0, max_abs(m));
  if (!is_split_hermitian(m, tol))
    throw std::invalid_argument("gaussian_action: matrix is not split-Hermitian");
  double acc = 0.0;
  switch (kind) {
    case EnsembleKind::gsce:
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k) {
          const auto& p = m(i, k);
          if (std::abs(p.p1) > tol || std::abs(p.p3) > tol)
            throw std::invalid_argument("gaussian_action: GSCE entry outside the {1, j} span");
          acc += p.p0 * p.p0 - p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3;
        }
      return acc;
    case EnsembleKind::gsqe:
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t k = 0; k < m.size(); ++k) acc += component_sum_sq(m(i, k));
      return 2.0 * acc;
    default:
      throw std::invalid_argument("gaussian_action: no action for this ensemble kind");
  }
}

// Log of the density prefactor, carried as metadata (sampling never needs
// it): GSCE (1/pi)^{n/2} (2/pi)^{n(n-1)/2}, GSQE (2/pi)^{n/2} (2/sqrt(pi))^{2n(n-1)}.
inline double log_normalization(EnsembleKind kind, std::size_t n) {
  const double pi = 3.14159265358979323846;
  const double nn = static_cast<double>(n);
  switch (kind) {
    case EnsembleKind::gsce:
      return 0.5 * nn * std::log(1.0 / pi) + 0.5 * nn * (nn - 1.0) * std::log(2.0 / pi);
    case EnsembleKind::gsqe:
      return 0.5 * nn * std::log(2.0 / pi) + 2.0 * nn * (nn - 1.0) * std::log(2.0 / std::sqrt(pi));
    default:
      throw std::invalid_argument("log_normalization: no closed form for this ensemble kind");
  }
}

// Convenience constructor for the standard 2x2 split-complex Hermitian
// parametrization: diagonal (l1, l2), off-diagonal h12 = delta - j gamma and
// h21 = delta + j gamma.
inline SplitMatrixd sc_hermitian_2x2(double l1, double l2, double delta, double gamma) {
  SplitMatrixd h(2, MatrixKind::split_complex_hermitian);
  h(0, 0) = SplitQuaterniond(l1, 0.0, 0.0, 0.0);
  h(1, 1) = SplitQuaterniond(l2, 0.0, 0.0, 0.0);
  h(0, 1) = SplitQuaterniond(delta, 0.0, -gamma, 0.0);
  h(1, 0) = SplitQuaterniond(delta, 0.0, gamma, 0.0);
  return h;
}

}  // namespace splitmat
