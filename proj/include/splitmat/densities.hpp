#pragma once

// Closed-form eigenvalue distributions of the 2x2 Gaussian split-Hermitian
// ensembles: joint pdfs, one-level densities split into a real-axis branch
// and a complex-plane branch, real-spectrum probabilities, and the unit-mean
// level-spacing laws.  Companion cumulative functions are provided for
// goodness-of-fit tests.
//
// Products of the form exp(+u^2) * erfc(v) appear throughout; they are
// always evaluated through the scaled complement erfcx to stay finite for
// large arguments.

#include <cmath>
#include <stdexcept>

#include "splitmat/types.hpp"

namespace splitmat {

// Scaled complementary error function exp(t^2) erfc(t).  Direct product up
// to t = 25 (both factors representable), asymptotic series beyond.
inline double erfcx(double t) {
  if (t <= 25.0) return std::exp(t * t) * std::erfc(t);
  const double inv2 = 1.0 / (2.0 * t * t);
  double sum = 1.0, term = 1.0;
  for (int k = 1; k <= 6; ++k) {
    term *= -(2.0 * k - 1.0) * inv2;
    sum += term;
  }
  return sum / (t * std::sqrt(M_PI));
}

// Joint eigenvalue pdf of the split-complex ensemble,
//   exp(-(l1^2 + l2^2)) |l1 - l2| erfc(2 |Im l1|) / (2 sqrt(pi)),
// defined for two real eigenvalues or a conjugate pair (where l1^2 + l2^2
// is real).  Anything else is outside the support of a 2x2 spectrum.
inline double jpdf_sc(cdouble l1, cdouble l2) {
  const double sqrt_pi = std::sqrt(M_PI);
  if (l1.imag() == 0.0 && l2.imag() == 0.0) {
    const double a = l1.real(), b = l2.real();
    return std::exp(-(a * a + b * b)) * std::abs(a - b) / (2.0 * sqrt_pi);
  }
  const double tol = 1e-12 * (1.0 + std::abs(l1));
  if (std::abs(l2 - std::conj(l1)) > tol)
    throw std::invalid_argument("jpdf_sc: eigenvalues must be real or a conjugate pair");
  const double x = l1.real(), y = std::abs(l1.imag());
  // exp(-2(x^2 - y^2)) erfc(2y) = exp(-2x^2 - 2y^2) erfcx(2y)
  return std::exp(-2.0 * (x * x + y * y)) * erfcx(2.0 * y) * (2.0 * y) / (2.0 * sqrt_pi);
}

// Real-axis one-level density of the split-complex ensemble; even, with
// total mass 1/sqrt(2).
inline double r1_real_sc(double l) {
  return 0.5 * l * std::exp(-l * l) * std::erf(l) +
         std::exp(-2.0 * l * l) / (2.0 * std::sqrt(M_PI));
}

// Complex-plane one-level density of the split-complex ensemble,
//   (2 |Im l| / sqrt(pi)) exp(-2(Re^2 - Im^2)) erfc(2 |Im l|);
// plane integral 1 - 1/sqrt(2).  The real axis belongs to the other branch.
inline double r1_complex_sc(cdouble l) {
  if (l.imag() == 0.0)
    throw std::invalid_argument("r1_complex_sc: real axis belongs to the real branch");
  const double x = l.real(), y = std::abs(l.imag());
  return (2.0 * y / std::sqrt(M_PI)) * std::exp(-2.0 * (x * x + y * y)) * erfcx(2.0 * y);
}

// Joint pdf of two real eigenvalues of the split-quaternionic ensemble.
inline double jpdf_real_sq(double l1, double l2) {
  const double gap = std::abs(l1 - l2);
  const double sum_sq = l1 * l1 + l2 * l2;
  const double t1 = (2.0 / M_PI) * gap * gap * std::exp(-2.0 * sum_sq);
  // exp(-4 l1 l2) erfc(sqrt(2) gap) = erfcx(sqrt(2) gap) exp(-2(l1^2 + l2^2))
  const double t2 =
      gap / std::sqrt(2.0 * M_PI) * erfcx(std::sqrt(2.0) * gap) * std::exp(-2.0 * sum_sq);
  return t1 + t2;
}

// Real-axis one-level density of the split-quaternionic ensemble,
//   exp(-4l^2)/(8l^2 sqrt(2pi)) + (exp(-2l^2)/sqrt(2pi)) (2l^2 + 1 - 1/(8l^2)),
// with the removable singularity at l = 0 (limit 3/(4 sqrt(2pi))) bridged by
// a series: the two 1/(8l^2) terms cancel catastrophically in doubles.
inline double r1_real_sq(double l) {
  const double t = l * l;
  double bracket;  // (exp(-4t) - exp(-2t)) / (8t)
  if (std::abs(l) < 1e-3)
    bracket = -0.25 + 0.75 * t - (7.0 / 6.0) * t * t + 1.25 * t * t * t;
  else
    bracket = (std::exp(-4.0 * t) - std::exp(-2.0 * t)) / (8.0 * t);
  return (bracket + std::exp(-2.0 * t) * (2.0 * t + 1.0)) / std::sqrt(2.0 * M_PI);
}

// Complex-plane one-level density of the split-quaternionic ensemble,
//   2 sqrt(2/pi) |Im l| exp(-4 |l|^2);  plane integral 1/(2 sqrt(2)).
inline double r1_complex_sq(cdouble l) {
  if (l.imag() == 0.0)
    throw std::invalid_argument("r1_complex_sq: real axis belongs to the real branch");
  const double x = l.real(), y = std::abs(l.imag());
  return 2.0 * std::sqrt(2.0 / M_PI) * y * std::exp(-4.0 * (x * x + y * y));
}

// Constant fixing the unit mean of the split-quaternionic spacing law:
//   a = ((3 sqrt(2) - asinh(1)) / ((2 sqrt(2) - 1) sqrt(pi)))^2.
inline double spacing_constant_a() {
  const double num = 3.0 * std::sqrt(2.0) - std::asinh(1.0);
  const double den = (2.0 * std::sqrt(2.0) - 1.0) * std::sqrt(M_PI);
  return (num / den) * (num / den);
}

struct SpacingConstant {
  double a = spacing_constant_a();
};

// Probability that a 2x2 sample has a fully real spectrum.
inline double real_probability(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::gsce:
      return std::sqrt(0.5);
    case EnsembleKind::gsqe:
      return 1.0 - 0.5 * std::sqrt(0.5);
    default:
      throw std::invalid_argument("real_probability: no closed form for this ensemble kind");
  }
}

// Unit-mean spacing pdf of the two real eigenvalues, conditional on a real
// spectrum.  GSCE: (pi/2) s exp(-pi s^2 / 4).  GSQE:
//   (4 sqrt(2) / (2 sqrt(2) - 1)) [ a^{3/2} (s^2/sqrt(pi)) e^{-a s^2}
//                                   + a (s / (2 sqrt(2))) e^{a s^2} erfc(sqrt(2a) s) ].
// The per-term powers of a come from rescaling the conditional |gap| density
// by its mean sqrt(a): the e^{-a s^2} term picks up a^{3/2} and the erfc term
// a^1, which is what makes the mass exactly one for the unit-mean a.
inline double spacing_pdf(EnsembleKind kind, double s) {
  if (s < 0.0) throw std::invalid_argument("spacing_pdf: spacing must be non-negative");
  switch (kind) {
    case EnsembleKind::gsce:
      return 0.5 * M_PI * s * std::exp(-0.25 * M_PI * s * s);
    case EnsembleKind::gsqe: {
      const double a = spacing_constant_a();
      const double prefactor = 4.0 * std::sqrt(2.0) / (2.0 * std::sqrt(2.0) - 1.0);
      const double gauss = std::exp(-a * s * s);
      const double t1 = a * std::sqrt(a) * s * s / std::sqrt(M_PI) * gauss;
      const double t2 = a * s / (2.0 * std::sqrt(2.0)) * erfcx(std::sqrt(2.0 * a) * s) * gauss;
      return prefactor * (t1 + t2);
    }
    default:
      throw std::invalid_argument("spacing_pdf: no closed form for this ensemble kind");
  }
}

// One eigenvalue's density splits into a real-axis branch (the weight of the
// singular line) and a complex-plane branch; the split is structural, so the
// line density is never mixed into plane values numerically.
enum class DensityBranch { real_axis, complex_plane };

struct DensityValue {
  double value;
  DensityBranch branch;
};

inline DensityValue total_density(EnsembleKind kind, cdouble lambda) {
  if (kind != EnsembleKind::gsce && kind != EnsembleKind::gsqe)
    throw std::invalid_argument("total_density: no closed form for this ensemble kind");
  if (lambda.imag() == 0.0) {
    const double v =
        kind == EnsembleKind::gsce ? r1_real_sc(lambda.real()) : r1_real_sq(lambda.real());
    return {v, DensityBranch::real_axis};
  }
  const double v = kind == EnsembleKind::gsce ? r1_complex_sc(lambda) : r1_complex_sq(lambda);
  return {v, DensityBranch::complex_plane};
}

// Cumulative distribution of a real eigenvalue conditional on a fully real
// spectrum (the real-axis branch rescaled to unit mass).  Antiderivatives of
// r1_real_sc and r1_real_sq; cross-checked against direct quadrature in the
// tests.
inline double cdf_real_sc_conditional(double x) {
  return -std::sqrt(2.0) / 4.0 * std::exp(-x * x) * std::erf(x) +
         0.5 * (1.0 + std::erf(std::sqrt(2.0) * x));
}

inline double cdf_real_sq_conditional(double x) {
  double head;  // (exp(-2x^2) - exp(-4x^2)) / (8x), series near 0
  if (std::abs(x) < 1e-3)
    head = x * (0.25 - 0.75 * x * x + (7.0 / 6.0) * x * x * x * x);
  else
    head = (std::exp(-2.0 * x * x) - std::exp(-4.0 * x * x)) / (8.0 * x);
  const double unnormalized =
      (head - 0.5 * x * std::exp(-2.0 * x * x) +
       std::sqrt(0.5 * M_PI) * (1.0 + std::erf(std::sqrt(2.0) * x)) -
       0.25 * std::sqrt(M_PI) * (1.0 + std::erf(2.0 * x))) /
      std::sqrt(2.0 * M_PI);
  return unnormalized / real_probability(EnsembleKind::gsqe);
}

// Cumulative spacing distributions matching spacing_pdf.
inline double cdf_spacing(EnsembleKind kind, double s) {
  if (s < 0.0) throw std::invalid_argument("cdf_spacing: spacing must be non-negative");
  switch (kind) {
    case EnsembleKind::gsce:
      return 1.0 - std::exp(-0.25 * M_PI * s * s);
    case EnsembleKind::gsqe: {
      const double a = spacing_constant_a();
      const double sqrt_a = std::sqrt(a);
      const double gauss = std::exp(-a * s * s);
      const double prefactor = 4.0 * std::sqrt(2.0) / (2.0 * std::sqrt(2.0) - 1.0);
      const double i1 = -s * gauss / (2.0 * a) +
                        std::sqrt(M_PI) * std::erf(sqrt_a * s) / (4.0 * a * sqrt_a);
      const double i2 = (erfcx(std::sqrt(2.0 * a) * s) * gauss - 1.0 +
                         std::sqrt(2.0) * std::erf(sqrt_a * s)) /
                        (2.0 * a);
      return prefactor *
             (a * sqrt_a * i1 / std::sqrt(M_PI) + a * i2 / (2.0 * std::sqrt(2.0)));
    }
    default:
      throw std::invalid_argument("cdf_spacing: no closed form for this ensemble kind");
  }
}

}  // namespace splitmat
