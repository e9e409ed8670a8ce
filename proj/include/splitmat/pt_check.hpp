#pragma once

// Classification of complex matrices by reality of the characteristic
// polynomial (their eigenvalues are then real or conjugate-paired), and a
// rank-of-differential probe of the constraint count that the reality
// conditions impose on the matrix parameters.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "splitmat/spectral.hpp"
#include "splitmat/types.hpp"

namespace splitmat {

struct PTReport {
  bool is_pt = false;
  double max_imag_coeff = 0.0;          // largest |Im| over the coefficients
  std::vector<cdouble> coeffs;          // monic characteristic polynomial
  int jacobian_rank = -1;               // filled only by the rank probe
};

// A matrix counts as PT-symmetric when every characteristic-polynomial
// coefficient is real to within tol times the coefficient scale.
inline PTReport is_pt_symmetric(const Eigen::MatrixXcd& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_pt_symmetric: tol must be positive");
  PTReport report;
  report.coeffs = char_poly_complex(a);
  double scale = 1.0;
  for (const auto& c : report.coeffs) scale = std::max(scale, std::abs(c));
  for (const auto& c : report.coeffs)
    report.max_imag_coeff = std::max(report.max_imag_coeff, std::abs(c.imag()));
  report.is_pt = report.max_imag_coeff <= tol * scale;
  return report;
}

// Numerical rank of the n x 2n^2 Jacobian of (matrix real parameters) ->
// (imaginary parts of the n non-leading characteristic coefficients), by
// central differences.  At generic points the rank is n, so the reality
// conditions cut exactly n dimensions out of the 2n^2 real parameters.
inline int pt_jacobian_rank(const Eigen::MatrixXcd& a, double step = 1e-6) {
  if (a.rows() != a.cols()) throw std::invalid_argument("pt_jacobian_rank: matrix must be square");
  if (!(step > 0.0)) throw std::invalid_argument("pt_jacobian_rank: step must be positive");
  const Eigen::Index n = a.rows();
  const Eigen::Index n_params = 2 * n * n;
  Eigen::MatrixXd jac(n, n_params);

  Eigen::MatrixXcd work = a;
  for (Eigen::Index p = 0; p < n_params; ++p) {
    const Eigen::Index entry = p / 2;
    const Eigen::Index r = entry / n, c = entry % n;
    const cdouble delta = (p % 2 == 0) ? cdouble(step, 0.0) : cdouble(0.0, step);

    work(r, c) = a(r, c) + delta;
    const std::vector<cdouble> plus = char_poly_complex(work);
    work(r, c) = a(r, c) - delta;
    const std::vector<cdouble> minus = char_poly_complex(work);
    work(r, c) = a(r, c);

    for (Eigen::Index k = 0; k < n; ++k)
      jac(k, p) = (plus[static_cast<std::size_t>(k) + 1].imag() -
                   minus[static_cast<std::size_t>(k) + 1].imag()) /
                  (2.0 * step);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-6 * sv(0)) ++rank;
  return rank;
}

}  // namespace splitmat
