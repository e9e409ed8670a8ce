#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "splitmat/ensembles.hpp"
#include "splitmat/rng.hpp"
#include "splitmat/split_matrix.hpp"
#include "splitmat/stats.hpp"

using namespace splitmat;

TEST_CASE("GSCE samples are split-complex Hermitian") {
  RngStream rng(101, 0);
  for (int t = 0; t < 100; ++t) {
    const auto h = sample_gsce(4, rng);
    CHECK(h.kind() == MatrixKind::split_complex_hermitian);
    CHECK(is_split_hermitian(h, 0.0));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(h(i, i).p1 == 0.0);
      CHECK(h(i, i).p2 == 0.0);
      CHECK(h(i, i).p3 == 0.0);
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(h(i, k).p1 == 0.0);  // entries stay in the {1, j} span
        CHECK(h(i, k).p3 == 0.0);
      }
    }
  }
}

TEST_CASE("GSQE samples are split-quaternion Hermitian with real diagonal") {
  RngStream rng(102, 0);
  for (int t = 0; t < 100; ++t) {
    const auto h = sample_gsqe(4, rng);
    CHECK(h.kind() == MatrixKind::split_hermitian);
    CHECK(is_split_hermitian(h, 0.0));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(h(i, i).p1 == 0.0);
      CHECK(h(i, i).p2 == 0.0);
      CHECK(h(i, i).p3 == 0.0);
    }
  }
}

TEST_CASE("GSCE entry variances match the weight exp(-tr(H H^T))") {
  RngStream rng(103, 0);
  const int n_samples = 100000;
  std::vector<double> diag, off_x, off_y;
  diag.reserve(n_samples);
  off_x.reserve(n_samples);
  off_y.reserve(n_samples);
  for (int t = 0; t < n_samples; ++t) {
    const auto h = sample_gsce(2, rng);
    diag.push_back(h(0, 0).p0);
    off_x.push_back(h(0, 1).p0);
    off_y.push_back(h(0, 1).p2);
  }
  // standard error of a variance estimate: sigma^2 sqrt(2/n) ~ 0.002 and 0.001
  CHECK(std::abs(mean(diag)) < 0.01);
  CHECK(variance(diag) == doctest::Approx(0.5).epsilon(0.025));
  CHECK(variance(off_x) == doctest::Approx(0.25).epsilon(0.025));
  CHECK(variance(off_y) == doctest::Approx(0.25).epsilon(0.025));
  CHECK(std::abs(correlation(off_x, off_y)) < 0.02);
}

TEST_CASE("GSQE entry variances match the weight exp(-2 sum |h|_+^2)") {
  RngStream rng(104, 0);
  const int n_samples = 100000;
  std::vector<double> diag, p0, p1, p2, p3;
  for (int t = 0; t < n_samples; ++t) {
    const auto h = sample_gsqe(2, rng);
    diag.push_back(h(1, 1).p0);
    p0.push_back(h(0, 1).p0);
    p1.push_back(h(0, 1).p1);
    p2.push_back(h(0, 1).p2);
    p3.push_back(h(0, 1).p3);
  }
  CHECK(variance(diag) == doctest::Approx(0.25).epsilon(0.025));
  CHECK(variance(p0) == doctest::Approx(0.125).epsilon(0.025));
  CHECK(variance(p1) == doctest::Approx(0.125).epsilon(0.025));
  CHECK(variance(p2) == doctest::Approx(0.125).epsilon(0.025));
  CHECK(variance(p3) == doctest::Approx(0.125).epsilon(0.025));
  CHECK(std::abs(correlation(p0, p2)) < 0.02);
  CHECK(std::abs(correlation(p1, p3)) < 0.02);
}

TEST_CASE("samplers are deterministic in (seed, stream)") {
  RngStream a(7, 3), b(7, 3);
  const auto ha = sample_gsqe(3, a);
  const auto hb = sample_gsqe(3, b);
  CHECK(max_abs(ha - hb) == 0.0);
}

TEST_CASE("gaussian_action reproduces the quadratic form by hand") {
  // GSCE: diag (a, b), off-diagonal x + j y gives a^2 + b^2 + 2(x^2 + y^2)
  const auto h = sc_hermitian_2x2(1.5, -0.5, 0.25, -0.75);
  const double expected = 1.5 * 1.5 + 0.5 * 0.5 + 2.0 * (0.25 * 0.25 + 0.75 * 0.75);
  CHECK(gaussian_action(h, EnsembleKind::gsce) == doctest::Approx(expected).epsilon(1e-14));

  // GSQE: twice the all-component square over every entry
  SplitMatrixd g(2, MatrixKind::split_hermitian);
  g(0, 0) = SplitQuaterniond(0.5);
  g(1, 1) = SplitQuaterniond(-1.0);
  g(0, 1) = SplitQuaterniond(0.1, 0.2, 0.3, 0.4);
  g(1, 0) = conj(g(0, 1));
  const double off = 0.01 + 0.04 + 0.09 + 0.16;
  CHECK(gaussian_action(g, EnsembleKind::gsqe) ==
        doctest::Approx(2.0 * (0.25 + 1.0 + 2.0 * off)).epsilon(1e-14));

  // the GSCE form rejects entries outside the {1, j} span
  CHECK_THROWS_AS(gaussian_action(g, EnsembleKind::gsce), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_action(g, EnsembleKind::ginibre_real), std::invalid_argument);

  SplitMatrixd not_herm(2);
  not_herm(0, 1) = SplitQuaterniond(1.0);
  CHECK_THROWS_AS(gaussian_action(not_herm, EnsembleKind::gsqe), std::invalid_argument);
}

TEST_CASE("action is non-negative on samples and matches the density exponent") {
  RngStream rng(105, 0);
  for (int t = 0; t < 200; ++t) {
    CHECK(gaussian_action(sample_gsce(3, rng), EnsembleKind::gsce) >= 0.0);
    CHECK(gaussian_action(sample_gsqe(3, rng), EnsembleKind::gsqe) >= 0.0);
  }
}

TEST_CASE("log_normalization matches the factorized Gaussian integrals") {
  // the weight factorizes over matrix entries, so the closed form must equal
  // -log of a product of one-dimensional integrals checked by quadrature
  const double int_diag_sc = quad([](double x) { return std::exp(-x * x); }, -12.0, 12.0, 1e-13);
  const double int_off_sc = quad([](double x) { return std::exp(-2.0 * x * x); }, -12.0, 12.0, 1e-13);
  const double int_diag_sq = int_off_sc;
  const double int_off_sq = quad([](double x) { return std::exp(-4.0 * x * x); }, -12.0, 12.0, 1e-13);

  for (std::size_t n = 1; n <= 5; ++n) {
    const double pairs = 0.5 * static_cast<double>(n) * (static_cast<double>(n) - 1.0);
    const double log_z_sc =
        static_cast<double>(n) * std::log(int_diag_sc) + pairs * 2.0 * std::log(int_off_sc);
    const double log_z_sq =
        static_cast<double>(n) * std::log(int_diag_sq) + pairs * 4.0 * std::log(int_off_sq);
    CHECK(log_normalization(EnsembleKind::gsce, n) == doctest::Approx(-log_z_sc).epsilon(1e-10));
    CHECK(log_normalization(EnsembleKind::gsqe, n) == doctest::Approx(-log_z_sq).epsilon(1e-10));
  }
  CHECK_THROWS_AS(log_normalization(EnsembleKind::ginibre_real, 2), std::invalid_argument);
}

TEST_CASE("sc_hermitian_2x2 lays out its four parameters") {
  const auto h = sc_hermitian_2x2(1.0, 2.0, 3.0, 4.0);
  CHECK(h.kind() == MatrixKind::split_complex_hermitian);
  CHECK(h(0, 0).p0 == 1.0);
  CHECK(h(1, 1).p0 == 2.0);
  CHECK(h(0, 1).p0 == 3.0);
  CHECK(h(0, 1).p2 == -4.0);
  CHECK(h(1, 0).p0 == 3.0);
  CHECK(h(1, 0).p2 == 4.0);
  CHECK(is_split_hermitian(h, 0.0));
}

TEST_CASE("real Ginibre sampler fills an unstructured Gaussian matrix") {
  RngStream rng(106, 0);
  const int n_samples = 20000;
  std::vector<double> entries;
  entries.reserve(4 * n_samples);
  for (int t = 0; t < n_samples; ++t) {
    const auto g = sample_real_ginibre(2, 0.7, rng);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) entries.push_back(g(i, k));
  }
  CHECK(std::abs(mean(entries)) < 0.01);
  CHECK(variance(entries) == doctest::Approx(0.49).epsilon(0.03));
}
