#include "splitmat/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "splitmat/densities.hpp"
#include "splitmat/ensembles.hpp"
#include "splitmat/ginibre_bridge.hpp"
#include "splitmat/mc.hpp"
#include "splitmat/pt_check.hpp"
#include "splitmat/spectral.hpp"
#include "splitmat/stats.hpp"

namespace splitmat {

namespace {

// Disjoint stream-id blocks so no two phases ever touch the same substream.
constexpr std::uint64_t kBasePooled = 100000;      // + 100000 per ensemble
constexpr std::uint64_t kBaseSpacing = 300000;     // + 100000 per ensemble
constexpr std::uint64_t kBaseBridgeResidual = 500000;
constexpr std::uint64_t kBaseBridgeMoments = 600000;
constexpr std::uint64_t kBaseBridgeLarge = 700000;
constexpr std::uint64_t kBaseStructural = 800000;  // + 20000 per matrix size
constexpr std::uint64_t kBaseAlgebra = 900000;
constexpr std::uint64_t kBaseAdjoint = 910000;
constexpr std::uint64_t kBasePtRank = 920000;      // + 1000 per matrix size
constexpr std::uint64_t kBaseEigenvectors = 930000;
constexpr std::uint64_t kBaseInvariance = 940000;

constexpr std::size_t kReferenceSamples = 200000;  // counts the reference tolerances assume

struct Suite {
  VerifyReport report;
  bool tamper = false;

  void add(std::string name, double observed, double expected, double tol) {
    CheckResult c;
    c.name = std::move(name);
    c.observed = observed;
    c.expected = expected;
    c.tol = tamper ? 0.0 : tol;
    c.pass = std::abs(observed - expected) <= c.tol;
    report.checks.push_back(std::move(c));
  }
};

McPlan plan_for(const VerifyConfig& cfg, std::size_t count, std::uint64_t stream_base) {
  McPlan plan;
  plan.count = count;
  plan.seed = cfg.seed;
  plan.stream_base = stream_base;
  plan.workers = cfg.workers;
  return plan;
}

SplitMatrixd draw(EnsembleKind kind, std::size_t n, RngStream& rng) {
  return kind == EnsembleKind::gsce ? sample_gsce(n, rng) : sample_gsqe(n, rng);
}

double r1_real(EnsembleKind kind, double x) {
  return kind == EnsembleKind::gsce ? r1_real_sc(x) : r1_real_sq(x);
}

double r1_complex(EnsembleKind kind, cdouble z) {
  return kind == EnsembleKind::gsce ? r1_complex_sc(z) : r1_complex_sq(z);
}

const char* tag(EnsembleKind kind) { return kind == EnsembleKind::gsce ? "gsce" : "gsqe"; }

// Pooled 2x2 spectra: real-spectrum fraction, conditional real-branch KS
// against the quadrature CDF, complex-branch 2-D histogram error, and the
// plane integral of the complex branch.
void check_pooled(Suite& suite, const VerifyConfig& cfg, EnsembleKind kind, std::size_t count,
                  double stat_scale) {
  struct Chunk {
    std::size_t nreal = 0;
    std::vector<double> reals;
    std::vector<std::pair<double, double>> comps;
  };
  const auto base = kBasePooled + (kind == EnsembleKind::gsce ? 0 : 100000);
  auto chunks = run_chunked<Chunk>(plan_for(cfg, count, base),
                                   [&](std::size_t, RngStream& rng, std::size_t m) {
                                     Chunk out;
                                     for (std::size_t i = 0; i < m; ++i) {
                                       const auto sp = spectrum(draw(kind, 2, rng));
                                       if (sp.real_eigs.size() == 2) ++out.nreal;
                                       for (double x : sp.real_eigs) out.reals.push_back(x);
                                       for (cdouble z : sp.complex_pairs) {
                                         out.comps.emplace_back(z.real(), z.imag());
                                         out.comps.emplace_back(z.real(), -z.imag());
                                       }
                                     }
                                     return out;
                                   });

  std::size_t nreal = 0;
  std::vector<double> reals;
  std::vector<std::pair<double, double>> comps;
  for (auto& c : chunks) {
    nreal += c.nreal;
    reals.insert(reals.end(), c.reals.begin(), c.reals.end());
    comps.insert(comps.end(), c.comps.begin(), c.comps.end());
  }

  const double frac = static_cast<double>(nreal) / static_cast<double>(count);
  suite.add(std::string(tag(kind)) + " real fraction", frac, real_probability(kind),
            0.005 * stat_scale);

  std::sort(reals.begin(), reals.end());
  CdfTable cdf([&](double x) { return r1_real(kind, x); }, -9.0, 9.0, 4000, true);
  const double ks = ks_distance(reals, [&](double x) { return cdf(x); });
  suite.add(std::string(tag(kind)) + " real-branch ks", ks, 0.0,
            1.63 / std::sqrt(static_cast<double>(reals.size())));

  const std::size_t bins = 100;
  const Histogram2d h2 = histogram2d(comps, bins, bins, -2.0, 2.0, -2.0, 2.0);
  const double dx = 4.0 / static_cast<double>(bins);
  double mae = 0.0;
  for (std::size_t i = 0; i < bins; ++i)
    for (std::size_t j = 0; j < bins; ++j) {
      const double cx = -2.0 + (static_cast<double>(i) + 0.5) * dx;
      const double cy = -2.0 + (static_cast<double>(j) + 0.5) * dx;
      const double emp = static_cast<double>(h2.counts[i * bins + j]) /
                         (2.0 * static_cast<double>(count) * dx * dx);
      mae += std::abs(emp - r1_complex(kind, cdouble(cx, cy)));
    }
  mae /= static_cast<double>(bins * bins);
  suite.add(std::string(tag(kind)) + " complex-branch mae", mae, 0.0, 0.01 * stat_scale);

  // upper half-plane integral, doubled by conjugation symmetry
  auto slice = [&](double y) {
    if (y == 0.0) return 0.0;
    return quad([&](double x) { return r1_complex(kind, cdouble(x, y)); }, -6.0, 6.0, 1e-11);
  };
  const double plane = 2.0 * quad(slice, 0.0, 6.0, 1e-11);
  const double expected =
      kind == EnsembleKind::gsce ? 1.0 - std::sqrt(0.5) : 0.5 * std::sqrt(0.5);
  suite.add(std::string(tag(kind)) + " complex-branch plane integral", plane, expected, 1e-6);
}

// Unit-mean spacing law: empirical KS against the quadrature CDF of the
// closed form, plus its two defining moments by quadrature.
void check_spacing(Suite& suite, const VerifyConfig& cfg, EnsembleKind kind, std::size_t count) {
  const auto base = kBaseSpacing + (kind == EnsembleKind::gsce ? 0 : 100000);
  auto chunks = run_chunked<std::vector<double>>(
      plan_for(cfg, count, base), [&](std::size_t, RngStream& rng, std::size_t m) {
        std::vector<double> out;
        for (std::size_t i = 0; i < m; ++i) {
          const auto sp = spectrum(draw(kind, 2, rng));
          if (sp.real_eigs.size() == 2) out.push_back(sp.real_eigs[1] - sp.real_eigs[0]);
        }
        return out;
      });
  std::vector<double> gaps;
  for (auto& c : chunks) gaps.insert(gaps.end(), c.begin(), c.end());

  const double mu = mean(gaps);
  for (double& g : gaps) g /= mu;
  std::sort(gaps.begin(), gaps.end());
  CdfTable cdf([&](double s) { return spacing_pdf(kind, s); }, 0.0, 12.0, 4000, true);
  const double ks = ks_distance(gaps, [&](double s) { return cdf(s); });
  suite.add(std::string(tag(kind)) + " spacing ks", ks, 0.0,
            1.63 / std::sqrt(static_cast<double>(gaps.size())));

  const double mass = quad([&](double s) { return spacing_pdf(kind, s); }, 0.0, 12.0, 1e-10);
  const double first = quad([&](double s) { return s * spacing_pdf(kind, s); }, 0.0, 12.0, 1e-10);
  suite.add(std::string(tag(kind)) + " spacing pdf mass", mass, 1.0, 1e-6);
  suite.add(std::string(tag(kind)) + " spacing pdf mean", first, 1.0, 1e-6);
}

// The split-complex spacing law coincides with the 2x2 GOE surmise.
void check_wigner_identity(Suite& suite) {
  double worst = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double s = 4.0 * static_cast<double>(i) / 400.0;
    const double surmise = (M_PI / 2.0) * s * std::exp(-(M_PI * s * s) / 4.0);
    worst = std::max(worst, std::abs(spacing_pdf(EnsembleKind::gsce, s) - surmise));
  }
  suite.add("gsce spacing equals wigner surmise", worst, 0.0, 1e-15);
}

// 2x2 Ginibre bridge: block-diagonalization residual, the mapped entries'
// moments, and the n=5 block similarity (residual plus spectra matched
// between the split spectrum and the real block's eigenvalues).
void check_bridge(Suite& suite, const VerifyConfig& cfg, std::size_t residual_count,
                  std::size_t moment_count, double stat_scale) {
  auto residual_chunks = run_chunked<double>(
      plan_for(cfg, residual_count, kBaseBridgeResidual),
      [&](std::size_t, RngStream& rng, std::size_t m) {
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i)
          worst = std::max(worst, ginibre_equivalent(sample_gsce(2, rng)).residual);
        return worst;
      });
  double worst_residual = 0.0;
  for (double r : residual_chunks) worst_residual = std::max(worst_residual, r);
  suite.add("bridge 2x2 max residual", worst_residual, 0.0, 1e-12);

  struct Moments {
    std::array<std::vector<double>, 4> entries;
  };
  auto moment_chunks = run_chunked<Moments>(
      plan_for(cfg, moment_count, kBaseBridgeMoments),
      [&](std::size_t, RngStream& rng, std::size_t m) {
        Moments out;
        for (std::size_t i = 0; i < m; ++i) {
          const auto b = ginibre_equivalent(sample_gsce(2, rng)).ginibre_block;
          out.entries[0].push_back(b(0, 0));
          out.entries[1].push_back(b(0, 1));
          out.entries[2].push_back(b(1, 0));
          out.entries[3].push_back(b(1, 1));
        }
        return out;
      });
  std::array<std::vector<double>, 4> entries;
  for (auto& c : moment_chunks)
    for (int k = 0; k < 4; ++k)
      entries[k].insert(entries[k].end(), c.entries[k].begin(), c.entries[k].end());
  const char* names[4] = {"a", "b", "d", "c"};
  for (int k = 0; k < 4; ++k)
    suite.add(std::string("bridge entry variance ") + names[k], variance(entries[k]), 0.5,
              0.005 * stat_scale);
  double worst_corr = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      worst_corr = std::max(worst_corr, std::abs(correlation(entries[i], entries[j])));
  suite.add("bridge max abs correlation", worst_corr, 0.0, 0.01 * stat_scale);

  RngStream rng(cfg.seed, kBaseBridgeLarge);
  double worst5 = 0.0;
  double worst5_spec = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto h = sample_gsce(5, rng);
    const auto sim = block_similarity(h);
    worst5 = std::max(worst5, sim.residual);

    const auto mine = spectrum(h).all_eigenvalues();
    const Eigen::EigenSolver<Eigen::MatrixXd> es(sim.block);
    std::vector<cdouble> theirs(es.eigenvalues().data(),
                                es.eigenvalues().data() + es.eigenvalues().size());
    std::vector<bool> used(theirs.size(), false);
    for (const cdouble& lam : mine) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_j = 0;
      for (std::size_t j = 0; j < theirs.size(); ++j) {
        if (used[j]) continue;
        const double d = std::abs(lam - theirs[j]);
        if (d < best) {
          best = d;
          best_j = j;
        }
      }
      used[best_j] = true;
      worst5_spec = std::max(worst5_spec, best);
    }
  }
  suite.add("bridge 5x5 max residual", worst5, 0.0, 1e-12);
  suite.add("bridge 5x5 spectra agreement", worst5_spec, 0.0, 1e-9);
}

// Structural invariants of the embedding: characteristic-polynomial reality
// and exact double degeneracy, per matrix size, both ensembles pooled.
void check_structural(Suite& suite, const VerifyConfig& cfg, std::size_t count_per_size) {
  const std::size_t sizes[3] = {2, 3, 5};
  for (int si = 0; si < 3; ++si) {
    const std::size_t n = sizes[si];
    auto chunks = run_chunked<std::pair<double, double>>(
        plan_for(cfg, count_per_size, kBaseStructural + 20000 * static_cast<std::uint64_t>(si)),
        [&](std::size_t c, RngStream& rng, std::size_t m) {
          double worst_imag = 0.0, worst_pair = 0.0;
          for (std::size_t i = 0; i < m; ++i) {
            const auto kind = (c + i) % 2 == 0 ? EnsembleKind::gsce : EnsembleKind::gsqe;
            const auto h = draw(kind, n, rng);
            const Eigen::MatrixXcd rep = complex_rep(h);

            const auto coeffs = char_poly_complex(rep);
            double scale = 1.0;
            for (const auto& cf : coeffs) scale = std::max(scale, std::abs(cf));
            for (const auto& cf : coeffs)
              worst_imag = std::max(worst_imag, std::abs(cf.imag()) / scale);

            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rep, false);
            std::vector<cdouble> eigs(es.eigenvalues().data(),
                                      es.eigenvalues().data() + es.eigenvalues().size());
            std::sort(eigs.begin(), eigs.end(), [](const cdouble& a, const cdouble& b) {
              return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
            });
            double radius = 1.0;
            for (const auto& e : eigs) radius = std::max(radius, std::abs(e));
            // greedy nearest-unused pairing; consecutive pairing after the
            // sort would cross conjugates once roundoff reorders the reals
            std::vector<bool> used(eigs.size(), false);
            for (std::size_t k = 0; k < eigs.size(); ++k) {
              if (used[k]) continue;
              used[k] = true;
              double best = std::numeric_limits<double>::infinity();
              std::size_t best_j = eigs.size();
              for (std::size_t j = k + 1; j < eigs.size(); ++j) {
                if (used[j]) continue;
                const double d = std::abs(eigs[k] - eigs[j]);
                if (d < best) {
                  best = d;
                  best_j = j;
                }
              }
              used[best_j] = true;
              worst_pair = std::max(worst_pair, best / radius);
            }
          }
          return std::make_pair(worst_imag, worst_pair);
        });
    double worst_imag = 0.0, worst_pair = 0.0;
    for (auto& c : chunks) {
      worst_imag = std::max(worst_imag, c.first);
      worst_pair = std::max(worst_pair, c.second);
    }
    suite.add("charpoly reality n=" + std::to_string(n), worst_imag, 0.0, 1e-9);
    suite.add("degeneracy pairing n=" + std::to_string(n), worst_pair, 0.0, 1e-8);
  }
}

// Exact algebra identities: the 2x2 complex representation is multiplicative,
// and the adjoint moves across the indefinite inner product.
void check_algebra(Suite& suite, const VerifyConfig& cfg) {
  RngStream rng(cfg.seed, kBaseAlgebra);
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    SplitQuaternion<double> p{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    SplitQuaternion<double> q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    const Eigen::Matrix2cd lhs = complex_rep(p) * complex_rep(q);
    const Eigen::Matrix2cd rhs = complex_rep(p * q);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  suite.add("algebra representation multiplicative", worst, 0.0, 1e-12);

  RngStream rng2(cfg.seed, kBaseAdjoint);
  double worst_adj = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3;
    SplitMatrixd m(n);
    SplitVectord u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = SplitQuaternion<double>{rng2.normal(), rng2.normal(), rng2.normal(), rng2.normal()};
      v[i] = SplitQuaternion<double>{rng2.normal(), rng2.normal(), rng2.normal(), rng2.normal()};
      for (std::size_t k = 0; k < n; ++k)
        m(i, k) =
            SplitQuaternion<double>{rng2.normal(), rng2.normal(), rng2.normal(), rng2.normal()};
    }
    const auto lhs = inner_product(u, m * v);
    const auto rhs = inner_product(adjoint(m) * u, v);
    const auto diff = lhs - rhs;
    worst_adj = std::max(worst_adj, std::sqrt(component_sum_sq(diff)));

    const Eigen::MatrixXcd rep_adj = complex_rep(adjoint_i(m));
    const Eigen::MatrixXcd rep = complex_rep(m);
    worst_adj =
        std::max(worst_adj, (rep_adj - rep.adjoint()).cwiseAbs().maxCoeff());
  }
  suite.add("adjoint identity defect", worst_adj, 0.0, 1e-12);
}

// Dimension count of the PT-symmetric manifold: the constraint map has full
// rank N at generic complex matrices.
void check_pt_ranks(Suite& suite, const VerifyConfig& cfg) {
  for (std::size_t n : {std::size_t{2}, std::size_t{3}, std::size_t{4}, std::size_t{5}}) {
    RngStream rng(cfg.seed, kBasePtRank + n);
    int good = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
      Eigen::MatrixXcd a(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = cdouble(rng.normal(), rng.normal());
      if (pt_jacobian_rank(a, 1e-6) == static_cast<int>(n)) ++good;
    }
    suite.add("pt rank fraction n=" + std::to_string(n),
              static_cast<double>(good) / trials, 1.0, 0.01 + 1e-12);
  }
}

// Reconstructed eigenvectors of distinct real eigenvalues: small residual and
// vanishing indefinite inner product.
void check_eigenvectors(Suite& suite, const VerifyConfig& cfg, std::size_t target) {
  auto chunks = run_chunked<std::pair<double, double>>(
      plan_for(cfg, 2 * target, kBaseEigenvectors),
      [&](std::size_t, RngStream& rng, std::size_t m) {
        double worst_res = 0.0, worst_overlap = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const auto h = sample_gsqe(2, rng);
          const auto sp = spectrum(h);
          if (sp.real_eigs.size() != 2) continue;
          if (std::abs(sp.real_eigs[1] - sp.real_eigs[0]) < 1e-6) continue;
          const auto u0 = eigenvector_reconstruct(h, sp.real_eigs[0]);
          const auto u1 = eigenvector_reconstruct(h, sp.real_eigs[1]);
          for (int which = 0; which < 2; ++which) {
            const auto& u = which ? u1 : u0;
            const double lam = sp.real_eigs[which];
            for (std::size_t r = 0; r < 2; ++r) {
              SplitQuaternion<double> acc(0.0);
              for (std::size_t c = 0; c < 2; ++c) acc = acc + h(r, c) * u[c];
              acc = acc + u[r] * (-lam);
              worst_res = std::max(worst_res, std::sqrt(component_sum_sq(acc)));
            }
          }
          worst_overlap =
              std::max(worst_overlap, std::sqrt(component_sum_sq(inner_product(u0, u1))));
        }
        return std::make_pair(worst_res, worst_overlap);
      });
  double worst_res = 0.0, worst_overlap = 0.0;
  for (auto& c : chunks) {
    worst_res = std::max(worst_res, c.first);
    worst_overlap = std::max(worst_overlap, c.second);
  }
  suite.add("eigenvector residual max", worst_res, 0.0, 1e-8);
  suite.add("eigenvector overlap max", worst_overlap, 0.0, 1e-8);
}

// The Gaussian actions are exactly invariant under the symmetry groups the
// densities are built from: real orthogonal conjugation for the split-complex
// ensemble, embedded complex-unitary conjugation for the split-quaternionic.
void check_action_invariance(Suite& suite, const VerifyConfig& cfg) {
  RngStream rng(cfg.seed, kBaseInvariance);
  const std::size_t n = 4;
  double worst_sc = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto h = sample_gsce(n, rng);
    const Eigen::MatrixXd g = sample_real_ginibre(n, 1.0, rng);
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
    SplitMatrixd o(n), ot(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        o(i, k) = SplitQuaternion<double>(q(static_cast<Eigen::Index>(i),
                                            static_cast<Eigen::Index>(k)));
        ot(i, k) = SplitQuaternion<double>(q(static_cast<Eigen::Index>(k),
                                             static_cast<Eigen::Index>(i)));
      }
    const auto rotated = (ot * h) * o;
    worst_sc = std::max(worst_sc, std::abs(gaussian_action(rotated, EnsembleKind::gsce) -
                                           gaussian_action(h, EnsembleKind::gsce)));
  }
  suite.add("gsce action invariance", worst_sc, 0.0, 1e-10);

  double worst_sq = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto h = sample_gsqe(n, rng);
    Eigen::MatrixXcd g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
            cdouble(rng.normal(), rng.normal());
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    SplitMatrixd u(n), ua(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const cdouble fwd = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        const cdouble bwd = q(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i));
        u(i, k) = SplitQuaternion<double>{fwd.real(), fwd.imag(), 0.0, 0.0};
        ua(i, k) = SplitQuaternion<double>{bwd.real(), -bwd.imag(), 0.0, 0.0};
      }
    const auto rotated = (ua * h) * u;
    worst_sq = std::max(worst_sq, std::abs(gaussian_action(rotated, EnsembleKind::gsqe) -
                                           gaussian_action(h, EnsembleKind::gsqe)));
  }
  suite.add("gsqe action invariance", worst_sq, 0.0, 1e-10);
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  Suite suite;
  suite.tamper = config.tamper;

  const std::size_t base =
      config.mc_samples > 0 ? config.mc_samples : (config.full ? kReferenceSamples : 20000);
  // statistical tolerances assume the reference count; smaller runs get
  // proportionally wider bands (KS bands self-scale through the sample size)
  const double stat_scale =
      std::sqrt(static_cast<double>(kReferenceSamples) / static_cast<double>(base));

  suite.report.seed = config.seed;
  suite.report.base_samples = base;
  suite.report.workers = config.workers;
  suite.report.full = config.full;

  for (auto kind : {EnsembleKind::gsce, EnsembleKind::gsqe}) {
    check_pooled(suite, config, kind, base, stat_scale);
    check_spacing(suite, config, kind, std::max<std::size_t>(base / 2, 1000));
  }
  check_wigner_identity(suite);
  check_bridge(suite, config, std::max<std::size_t>(base / 20, 500), base, stat_scale);
  check_structural(suite, config, std::max<std::size_t>(base / 20, 500));
  check_algebra(suite, config);
  check_pt_ranks(suite, config);
  check_eigenvectors(suite, config, std::max<std::size_t>(base / 200, 100));
  check_action_invariance(suite, config);

  suite.report.pass = std::all_of(suite.report.checks.begin(), suite.report.checks.end(),
                                  [](const CheckResult& c) { return c.pass; });
  return suite.report;
}

}  // namespace splitmat
