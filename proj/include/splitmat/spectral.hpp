#pragma once

// Spectra of split-Hermitian matrices through the 2n x 2n complex embedding.
//
// The embedding's characteristic polynomial P has real coefficients and is a
// perfect square, P = q^2, with q real and monic of degree n.  The spectrum
// of the original matrix is the root multiset of q: real roots or complex
// conjugate pairs, exactly as for a real polynomial.  Eigenvectors for real
// eigenvalues pull back from the embedding by inverting the first column of
// the 2x2 entry representation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "splitmat/split_matrix.hpp"
#include "splitmat/types.hpp"

namespace splitmat {

// Monic characteristic polynomial coefficients of a complex matrix,
// coeffs[k] multiplying lambda^(n-k), coeffs[0] = 1.  Faddeev-LeVerrier
// recursion for n <= 16; product over eigenvalues beyond that.
inline std::vector<cdouble> char_poly_complex(const Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("char_poly_complex: matrix must be square");
  std::vector<cdouble> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = 1.0;
  if (n <= 16) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
      m = a * m;
      m.diagonal().array() += coeffs[static_cast<std::size_t>(k - 1)];
      // tr(a * m) as an elementwise sum, without forming the product
      coeffs[static_cast<std::size_t>(k)] =
          -a.cwiseProduct(m.transpose()).sum() / static_cast<double>(k);
    }
    return coeffs;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("char_poly_complex: eigensolver failed");
  for (Eigen::Index i = 0; i < n; ++i) {
    const cdouble root = es.eigenvalues()(i);
    for (Eigen::Index k = i + 1; k >= 1; --k)
      coeffs[static_cast<std::size_t>(k)] =
          coeffs[static_cast<std::size_t>(k)] - root * coeffs[static_cast<std::size_t>(k - 1)];
  }
  return coeffs;
}

namespace detail {

inline bool lex_less(const cdouble& a, const cdouble& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace detail

// The embedding's eigenvalues come in coincident pairs.  Walk them in
// lexicographic (re, im) order and greedily pair each one with its nearest
// unused partner, returning one representative per pair (the midpoint).
// Plain consecutive pairing after a lexicographic sort would be fooled by
// roundoff: the two copies of a complex eigenvalue can straddle its
// conjugate once 1e-16 noise in the real part drives the sort.  Throws if
// any matched pair is separated by more than 1e-6 of max(1, spectral
// radius).
inline std::vector<cdouble> pair_doubled_eigenvalues(std::vector<cdouble> eigs) {
  if (eigs.size() % 2 != 0)
    throw std::invalid_argument("pair_doubled_eigenvalues: odd eigenvalue count");
  std::sort(eigs.begin(), eigs.end(), detail::lex_less);
  double radius = 1.0;
  for (const auto& e : eigs) radius = std::max(radius, std::abs(e));
  std::vector<bool> used(eigs.size(), false);
  std::vector<cdouble> reps;
  reps.reserve(eigs.size() / 2);
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = eigs.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < eigs.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(eigs[i] - eigs[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best == eigs.size() || best_dist > 1e-6 * radius)
      throw std::runtime_error("pair_doubled_eigenvalues: degeneracy pairing failed");
    used[best] = true;
    reps.push_back(0.5 * (eigs[i] + eigs[best]));
  }
  return reps;
}

namespace detail {

// Expands prod (lambda - r) over a conjugate-closed root multiset and checks
// that the coefficients are real to within drop_tol times their scale.
inline std::vector<double> real_poly_from_roots(const std::vector<cdouble>& roots,
                                                double drop_tol) {
  std::vector<cdouble> coeffs(roots.size() + 1);
  coeffs[0] = 1.0;
  std::size_t used = 0;
  for (const cdouble& root : roots) {
    ++used;
    for (std::size_t k = used; k >= 1; --k) coeffs[k] -= root * coeffs[k - 1];
  }
  double scale = 1.0;
  for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
  std::vector<double> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (std::abs(coeffs[k].imag()) > drop_tol * scale)
      throw std::runtime_error("real_poly_from_roots: imaginary coefficient residue too large");
    out[k] = coeffs[k].real();
  }
  return out;
}

}  // namespace detail

// Real monic polynomial q of degree n with char(complex_rep(M)) = q^2.
// Coefficient coeffs[k] multiplies lambda^(n-k).  n = 2 uses the exact entry
// formula; n <= 8 extracts q from Faddeev-LeVerrier coefficients of the
// embedding by matching coefficients of q^2 from the leading term; larger n
// pairs the embedding's doubled eigenvalues and expands from the roots.
inline std::vector<double> reduced_char_poly(const SplitMatrixd& m) {
  const std::size_t n = m.size();
  const double herm_tol = 1e-9 * std::max(1.0, max_abs(m));
  if (!is_split_hermitian(m, herm_tol))
    throw std::invalid_argument("reduced_char_poly: matrix is not split-Hermitian");

  if (n == 2) {
    // trace and determinant are exact scalar expressions in the entries:
    // h12 h21 = h12 conj(h12) = norm_sq(h12)
    const double tr = m(0, 0).p0 + m(1, 1).p0;
    const double det = m(0, 0).p0 * m(1, 1).p0 - norm_sq(m(0, 1));
    return {1.0, -tr, det};
  }

  if (n <= 8) {
    const std::vector<cdouble> full = char_poly_complex(complex_rep(m));
    double scale = 1.0;
    for (const auto& c : full) scale = std::max(scale, std::abs(c));
    std::vector<double> p(full.size());
    for (std::size_t k = 0; k < full.size(); ++k) {
      if (std::abs(full[k].imag()) > 1e-9 * scale)
        throw std::runtime_error("reduced_char_poly: embedding coefficients are not real");
      p[k] = full[k].real();
    }
    // q^2 = p with q monic: solve the first n+1 coefficient equations,
    // then require the remaining n to hold as a consistency check.
    std::vector<double> q(n + 1);
    q[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      double cross = 0.0;
      for (std::size_t i = 1; i < k; ++i) cross += q[i] * q[k - i];
      q[k] = 0.5 * (p[k] - cross);
    }
    for (std::size_t k = n + 1; k <= 2 * n; ++k) {
      double conv = 0.0;
      for (std::size_t i = k - n; i <= n; ++i) conv += q[i] * q[k - i];
      if (std::abs(conv - p[k]) > 1e-7 * scale)
        throw std::runtime_error("reduced_char_poly: embedding polynomial is not a square");
    }
    return q;
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(complex_rep(m), false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("reduced_char_poly: eigensolver failed");
  std::vector<cdouble> eigs(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
  return detail::real_poly_from_roots(pair_doubled_eigenvalues(std::move(eigs)), 1e-9);
}

// Eigenvalues of a split-Hermitian matrix: real values plus complex
// conjugate pairs stored once with positive imaginary part.
struct Spectrum {
  std::vector<double> real_eigs;            // ascending
  std::vector<cdouble> complex_pairs;       // im > 0, sorted by (re, im)
  std::size_t n = 0;                        // real_eigs.size() + 2 * complex_pairs.size()

  // Emission order used throughout: real eigenvalues ascending, then each
  // conjugate pair as (re + i im, re - i im) sorted by (re, im).
  std::vector<cdouble> all_eigenvalues() const {
    std::vector<cdouble> all;
    all.reserve(n);
    for (double r : real_eigs) all.emplace_back(r, 0.0);
    for (const auto& p : complex_pairs) {
      all.push_back(p);
      all.push_back(std::conj(p));
    }
    return all;
  }
};

// Classifies the roots of a conjugate-closed multiset: |im| <= tol (1 + |z|)
// is treated as real.  Complex roots must balance between the half planes.
inline Spectrum classify_roots(const std::vector<cdouble>& roots, double tol) {
  Spectrum s;
  s.n = roots.size();
  std::vector<cdouble> lower;
  for (const auto& z : roots) {
    if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z)))
      s.real_eigs.push_back(z.real());
    else if (z.imag() > 0.0)
      s.complex_pairs.push_back(z);
    else
      lower.push_back(z);
  }
  if (lower.size() != s.complex_pairs.size())
    throw std::runtime_error("classify_roots: complex roots are not conjugate-paired");
  std::sort(s.real_eigs.begin(), s.real_eigs.end());
  std::sort(s.complex_pairs.begin(), s.complex_pairs.end(), detail::lex_less);
  return s;
}

// Spectrum of a split-Hermitian matrix.  n = 2 classifies by the exact sign
// of the reduced discriminant; n > 2 solves the companion matrix of q with a
// dense nonsymmetric eigensolver and classifies with the relative threshold.
inline Spectrum spectrum(const SplitMatrixd& m, double tol = 1e-9) {
  const std::vector<double> q = reduced_char_poly(m);
  const std::size_t n = m.size();
  if (n == 2) {
    Spectrum s;
    s.n = 2;
    const double b = q[1], c = q[2];
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      s.real_eigs = {0.5 * (-b - root), 0.5 * (-b + root)};
    } else {
      s.complex_pairs = {cdouble(-0.5 * b, 0.5 * std::sqrt(-disc))};
    }
    return s;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -q[n - i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed");
  std::vector<cdouble> roots(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
  return classify_roots(roots, tol);
}

// Split-quaternionic eigenvector for a real eigenvalue, reconstructed from a
// complex eigenvector w of the embedding: component m is
// (p0, p1, p2, p3) = (Re w_{2m}, Im w_{2m}, Re w_{2m+1}, -Im w_{2m+1}),
// the inverse of the first column of the 2x2 entry representation.
inline SplitVectord eigenvector_reconstruct(const SplitMatrixd& m, double lambda) {
  const std::size_t n = m.size();
  const Eigen::MatrixXcd rep = complex_rep(m);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rep, true);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigenvector_reconstruct: eigensolver failed");
  double radius = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    radius = std::max(radius, std::abs(es.eigenvalues()(i)));
  Eigen::Index best = 0;
  double best_dist = std::abs(es.eigenvalues()(0) - cdouble(lambda, 0.0));
  for (Eigen::Index i = 1; i < es.eigenvalues().size(); ++i) {
    const double d = std::abs(es.eigenvalues()(i) - cdouble(lambda, 0.0));
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  if (best_dist > 1e-6 * (1.0 + radius))
    throw std::invalid_argument("eigenvector_reconstruct: lambda is not an eigenvalue");

  const Eigen::VectorXcd w = es.eigenvectors().col(best);
  SplitVectord u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cdouble w0 = w(2 * static_cast<Eigen::Index>(i));
    const cdouble w1 = w(2 * static_cast<Eigen::Index>(i) + 1);
    u[i] = SplitQuaterniond(w0.real(), w0.imag(), w1.real(), -w1.imag());
  }

  const SplitVectord mu = m * u;
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const SplitQuaterniond d = mu[i] - lambda * u[i];
    residual = std::max(residual, std::sqrt(component_sum_sq(d)));
  }
  if (residual > 1e-8 * std::max(1.0, max_abs(m)))
    throw std::runtime_error("eigenvector_reconstruct: residual too large (defective pair?)");
  return u;
}

}  // namespace splitmat
