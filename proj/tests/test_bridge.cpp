#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "splitmat/ensembles.hpp"
#include "splitmat/ginibre_bridge.hpp"
#include "splitmat/rng.hpp"
#include "splitmat/spectral.hpp"
#include "splitmat/stats.hpp"

using namespace splitmat;

TEST_CASE("4x4 real embedding of the worked 2x2 example") {
  const auto h = sc_hermitian_2x2(1.0, 2.0, 3.0, 4.0);
  const Eigen::Matrix4d e = embed4(h);

  Eigen::Matrix4d expected;
  expected << 1, 0, 3, 4,
              0, 1, 4, 3,
              3, -4, 2, 0,
              -4, 3, 0, 2;
  CHECK((e - expected).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(embed4(SplitMatrixd(3)), std::invalid_argument);
  SplitMatrixd off_span(2);
  off_span(0, 1) = SplitQuaterniond(0.0, 1.0, 0.0, 0.0);
  off_span(1, 0) = conj(off_span(0, 1));
  CHECK_THROWS_AS(embed4(off_span), std::invalid_argument);
}

TEST_CASE("embedding equals the sign-adjusted real part of the complex representation") {
  RngStream rng(301, 0);
  const Eigen::Matrix4d signs = embed4_basis_signs();
  CHECK((signs * signs - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() == 0.0);
  for (int t = 0; t < 20; ++t) {
    const auto h = sample_gsce(2, rng);
    const Eigen::Matrix4d direct = embed4(h);
    const Eigen::Matrix4d via_rep = signs * complex_rep(h).real() * signs;
    CHECK((direct - via_rep).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("bridge conjugation matrix is orthogonal and involution-free") {
  const Eigen::Matrix4d o = bridge_orthogonal();
  CHECK((o.transpose() * o - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(std::abs(o.determinant()) - 1.0) < 1e-15);
}

TEST_CASE("2x2 split-complex Hermitian matrices reduce to a real Ginibre block") {
  // worked example: diagonal (1, 2), off-diagonal 3 - 4j
  const auto h = sc_hermitian_2x2(1.0, 2.0, 3.0, 4.0);
  const auto br = ginibre_equivalent(h);
  CHECK(br.residual < 1e-14);
  CHECK(br.ginibre_block(0, 0) == 2.0);   // l2
  CHECK(br.ginibre_block(0, 1) == -1.0);  // delta - gamma
  CHECK(br.ginibre_block(1, 0) == 7.0);   // delta + gamma
  CHECK(br.ginibre_block(1, 1) == 1.0);   // l1

  // the block carries the spectrum of the original matrix
  const Eigen::EigenSolver<Eigen::Matrix2d> es(br.ginibre_block);
  const auto spec = spectrum(h).all_eigenvalues();
  for (int i = 0; i < 2; ++i) {
    const cdouble lam = es.eigenvalues()(i);
    double best = 1e300;
    for (const auto& e : spec) best = std::min(best, std::abs(lam - e));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("Ginibre block spectra agree with the split spectrum on samples") {
  RngStream rng(302, 0);
  for (int t = 0; t < 50; ++t) {
    const auto h = sample_gsce(2, rng);
    const auto br = ginibre_equivalent(h);
    CHECK(br.residual < 1e-12);

    const Eigen::EigenSolver<Eigen::Matrix2d> es(br.ginibre_block);
    const auto spec = spectrum(h).all_eigenvalues();
    for (int i = 0; i < 2; ++i) {
      double best = 1e300;
      for (const auto& e : spec) best = std::min(best, std::abs(es.eigenvalues()(i) - e));
      CHECK(best < 1e-8);
    }
  }
}

TEST_CASE("block distribution matches a standard real Ginibre ensemble") {
  // the map (l1, l2, delta, gamma) -> [[l2, delta - gamma], [delta + gamma, l1]]
  // sends the sampling weight to four iid N(0, 1/2) entries
  RngStream rng(303, 0);
  const int n_samples = 40000;
  std::vector<double> a, b, d, c;
  for (int t = 0; t < n_samples; ++t) {
    const auto br = ginibre_equivalent(sample_gsce(2, rng));
    a.push_back(br.ginibre_block(0, 0));
    b.push_back(br.ginibre_block(0, 1));
    d.push_back(br.ginibre_block(1, 0));
    c.push_back(br.ginibre_block(1, 1));
  }
  CHECK(std::abs(mean(a)) < 0.015);
  CHECK(variance(a) == doctest::Approx(0.5).epsilon(0.03));
  CHECK(variance(b) == doctest::Approx(0.5).epsilon(0.03));
  CHECK(variance(d) == doctest::Approx(0.5).epsilon(0.03));
  CHECK(variance(c) == doctest::Approx(0.5).epsilon(0.03));
  CHECK(std::abs(correlation(a, c)) < 0.025);
  CHECK(std::abs(correlation(b, d)) < 0.025);
  CHECK(std::abs(correlation(a, b)) < 0.025);
}

TEST_CASE("general-size block similarity halves the doubled embedding") {
  RngStream rng(304, 0);
  for (std::size_t n : {2u, 3u, 5u, 7u}) {
    const auto h = sample_gsce(n, rng);
    const auto bs = block_similarity(h);
    CHECK(bs.residual < 1e-12);
    REQUIRE(bs.block.rows() == static_cast<Eigen::Index>(n));

    // eigenvalues of X + Y, with multiplicity, are the split spectrum
    const Eigen::EigenSolver<Eigen::MatrixXd> es(bs.block);
    std::vector<cdouble> block_eigs(es.eigenvalues().data(),
                                    es.eigenvalues().data() + es.eigenvalues().size());
    std::vector<cdouble> split_eigs = spectrum(h).all_eigenvalues();
    auto lex = [](const cdouble& p, const cdouble& q) {
      if (p.real() != q.real()) return p.real() < q.real();
      return p.imag() < q.imag();
    };
    std::sort(block_eigs.begin(), block_eigs.end(), lex);
    std::sort(split_eigs.begin(), split_eigs.end(), lex);
    REQUIRE(block_eigs.size() == split_eigs.size());
    for (std::size_t i = 0; i < block_eigs.size(); ++i)
      CHECK(std::abs(block_eigs[i] - split_eigs[i]) < 1e-7);
  }
}

TEST_CASE("block similarity decomposes into symmetric plus antisymmetric parts") {
  const auto h = sc_hermitian_2x2(1.0, 2.0, 3.0, 4.0);
  const auto bs = block_similarity(h);
  // X + Y = [[1, 3 + (-4)], [3 - (-4), 2]]; h(0,1) stores delta - j gamma
  CHECK(bs.block(0, 0) == 1.0);
  CHECK(bs.block(0, 1) == -1.0);
  CHECK(bs.block(1, 0) == 7.0);
  CHECK(bs.block(1, 1) == 2.0);

  SplitMatrixd sq(2);
  sq(0, 1) = SplitQuaterniond(0.0, 0.5, 0.0, 0.0);
  sq(1, 0) = conj(sq(0, 1));
  CHECK_THROWS_AS(block_similarity(sq), std::invalid_argument);
}
