// Command-line front end: sample ensembles to CSV, tabulate the analytic
// densities, and run the verification suite.  All file output is a pure
// function of the flags; Monte Carlo work is chunked into fixed-width RNG
// substreams so the worker count never changes the bytes written.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitmat/csv.hpp"
#include "splitmat/densities.hpp"
#include "splitmat/ensembles.hpp"
#include "splitmat/mc.hpp"
#include "splitmat/spectral.hpp"
#include "splitmat/verify.hpp"

#include <Eigen/Eigenvalues>

namespace {

using splitmat::cdouble;
using splitmat::EnsembleKind;

constexpr const char* kVersion = "1.0.0";

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPLITMAT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SPLITMAT_SEED", "not an unsigned integer: " + std::string(env));
    }
  }
  return 1;
}

EnsembleKind parse_ensemble(const std::string& name) {
  if (name == "gsce") return EnsembleKind::gsce;
  if (name == "gsqe") return EnsembleKind::gsqe;
  return EnsembleKind::ginibre_real;
}

struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t points = 0;

  double at(std::size_t i) const {
    if (points == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
};

// "lo:hi:n" with lo < hi and n >= 2; n points inclusive of both ends.
Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos)
    throw CLI::ValidationError("--grid", "expected lo:hi:n, got " + text);
  Grid g;
  try {
    g.lo = splitmat::parse_double(text.substr(0, first));
    g.hi = splitmat::parse_double(text.substr(first + 1, second - first - 1));
    const long long n = std::stoll(text.substr(second + 1));
    if (n < 2) throw std::invalid_argument("need at least two points");
    g.points = static_cast<std::size_t>(n);
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--grid", std::string(e.what()) + " in " + text);
  }
  if (!(g.lo < g.hi)) throw CLI::ValidationError("--grid", "lo must be below hi in " + text);
  return g;
}

struct EigRow {
  std::uint64_t sample_id = 0;
  int eig_index = 0;
  double re = 0.0;
  double im = 0.0;
  bool is_real = false;
};

// Eigenvalues of one real Ginibre draw in the library's emission order:
// reals ascending, then conjugate pairs (im > 0 first) sorted by (re, im).
std::vector<cdouble> ginibre_eigenvalues(const Eigen::MatrixXd& g) {
  const Eigen::EigenSolver<Eigen::MatrixXd> es(g, false);
  std::vector<cdouble> raw(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  std::vector<double> reals;
  std::vector<cdouble> pairs;
  for (const cdouble& z : raw) {
    if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z))) {
      reals.push_back(z.real());
    } else if (z.imag() > 0.0) {
      pairs.push_back(z);
    }
  }
  std::sort(reals.begin(), reals.end());
  std::sort(pairs.begin(), pairs.end(), [](const cdouble& a, const cdouble& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  std::vector<cdouble> out;
  out.reserve(raw.size());
  for (double r : reals) out.emplace_back(r, 0.0);
  for (const cdouble& p : pairs) {
    out.push_back(p);
    out.push_back(std::conj(p));
  }
  return out;
}

int run_sample(EnsembleKind kind, std::size_t size, std::size_t count, std::uint64_t seed,
               unsigned workers, const std::string& out_path) {
  splitmat::McPlan plan;
  plan.count = count;
  plan.seed = seed;
  plan.stream_base = 0;
  plan.workers = workers;

  auto chunks = splitmat::run_chunked<std::vector<EigRow>>(
      plan, [&](std::size_t c, splitmat::RngStream& rng, std::size_t m) {
        std::vector<EigRow> rows;
        rows.reserve(m * size);
        const std::uint64_t begin = c * plan.substream_width;
        for (std::size_t i = 0; i < m; ++i) {
          std::vector<cdouble> eigs;
          if (kind == EnsembleKind::ginibre_real) {
            eigs = ginibre_eigenvalues(
                splitmat::sample_real_ginibre(size, std::sqrt(0.5), rng));
          } else {
            const auto h = kind == EnsembleKind::gsce ? splitmat::sample_gsce(size, rng)
                                                      : splitmat::sample_gsqe(size, rng);
            eigs = splitmat::spectrum(h).all_eigenvalues();
          }
          int idx = 0;
          for (const cdouble& z : eigs)
            rows.push_back({begin + i, idx++, z.real(), z.imag(), z.imag() == 0.0});
        }
        return rows;
      });

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << "sample_id,eig_index,re,im,is_real\n";
  for (const auto& chunk : chunks)
    for (const auto& r : chunk)
      out << r.sample_id << ',' << r.eig_index << ',' << splitmat::format_double(r.re) << ','
          << splitmat::format_double(r.im) << ',' << (r.is_real ? 1 : 0) << '\n';
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return 1;
  }
  return 0;
}

int run_table(const std::string& what, EnsembleKind kind, const Grid& grid,
              const std::optional<Grid>& grid2, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }

  if (what == "r1-real") {
    out << "x,value\n";
    for (std::size_t i = 0; i < grid.points; ++i) {
      const double x = grid.at(i);
      const double v = kind == EnsembleKind::gsce ? splitmat::r1_real_sc(x)
                                                  : splitmat::r1_real_sq(x);
      out << splitmat::format_double(x) << ',' << splitmat::format_double(v) << '\n';
    }
  } else if (what == "r1-complex") {
    const Grid gy = grid2.value_or(grid);
    out << "re,im,value\n";
    for (std::size_t i = 0; i < grid.points; ++i)
      for (std::size_t j = 0; j < gy.points; ++j) {
        const double x = grid.at(i);
        const double y = gy.at(j);
        // the complex branch carries no mass on the real axis
        const double v = y == 0.0 ? 0.0
                         : kind == EnsembleKind::gsce
                             ? splitmat::r1_complex_sc(cdouble(x, y))
                             : splitmat::r1_complex_sq(cdouble(x, y));
        out << splitmat::format_double(x) << ',' << splitmat::format_double(y) << ','
            << splitmat::format_double(v) << '\n';
      }
  } else if (what == "spacing") {
    if (grid.lo < 0.0) {
      std::cerr << "error: spacing grid must be non-negative\n";
      return 2;
    }
    out << "s,value\n";
    for (std::size_t i = 0; i < grid.points; ++i) {
      const double s = grid.at(i);
      out << splitmat::format_double(s) << ','
          << splitmat::format_double(splitmat::spacing_pdf(kind, s)) << '\n';
    }
  } else {  // jpdf of two real eigenvalues
    const Grid gy = grid2.value_or(grid);
    out << "lambda1,lambda2,value\n";
    for (std::size_t i = 0; i < grid.points; ++i)
      for (std::size_t j = 0; j < gy.points; ++j) {
        const double l1 = grid.at(i);
        const double l2 = gy.at(j);
        const double v = kind == EnsembleKind::gsce
                             ? splitmat::jpdf_sc(cdouble(l1, 0.0), cdouble(l2, 0.0))
                             : splitmat::jpdf_real_sq(l1, l2);
        out << splitmat::format_double(l1) << ',' << splitmat::format_double(l2) << ','
            << splitmat::format_double(v) << '\n';
      }
  }

  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << out_path << "\n";
    return 1;
  }
  return 0;
}

int run_verify_cmd(const splitmat::VerifyConfig& cfg, const std::string& suite_name,
                   const std::string& out_path) {
  const splitmat::VerifyReport report = splitmat::run_verify(cfg);

  nlohmann::json doc;
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks)
    doc["checks"].push_back({{"name", c.name},
                             {"observed", c.observed},
                             {"expected", c.expected},
                             {"tol", c.tol},
                             {"pass", c.pass}});
  doc["config"] = {{"suite", suite_name},
                   {"seed", report.seed},
                   {"mc_samples", report.base_samples},
                   {"workers", report.workers},
                   {"version", kVersion}};
  doc["pass"] = report.pass;

  if (out_path.empty()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 1;
    }
    out << doc.dump(2) << '\n';
    out.close();
    if (!out) {
      std::cerr << "error: failed writing " << out_path << "\n";
      return 1;
    }
    for (const auto& c : report.checks)
      std::printf("%-38s %14.6g  expected %14.6g  tol %10.3g  %s\n", c.name.c_str(), c.observed,
                  c.expected, c.tol, c.pass ? "pass" : "FAIL");
    std::printf("overall: %s (%zu checks)\n", report.pass ? "pass" : "FAIL",
                report.checks.size());
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split-complex / split-quaternionic Hermitian ensemble toolkit"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "sample an ensemble and write eigenvalues as CSV");
  std::string ensemble = "gsce";
  std::size_t size = 2;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned workers = 1;
  std::string out_path;
  sample->add_option("--ensemble", ensemble, "ensemble to draw from")
      ->check(CLI::IsMember({"gsce", "gsqe", "ginibre"}))
      ->required();
  sample->add_option("--size", size, "matrix dimension")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  sample->add_option("--count", count, "number of matrices")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}))
      ->required();
  sample->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
  sample->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 256u));
  sample->add_option("--out", out_path, "output CSV path")->required();

  // table
  auto* table = app.add_subcommand("table", "tabulate an analytic density on a grid");
  std::string what;
  std::string table_ensemble = "gsce";
  std::string grid_text;
  std::string grid2_text;
  std::string table_out;
  table->add_option("--what", what, "which density to tabulate")
      ->check(CLI::IsMember({"r1-real", "r1-complex", "spacing", "jpdf"}))
      ->required();
  table->add_option("--ensemble", table_ensemble, "ensemble")
      ->check(CLI::IsMember({"gsce", "gsqe"}));
  table->add_option("--grid", grid_text, "grid as lo:hi:n (n points, ends included)")->required();
  table->add_option("--grid2", grid2_text, "second axis grid for 2-D tables");
  table->add_option("--out", table_out, "output CSV path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite_name = "fast";
  std::uint64_t vseed = 0;
  bool vseed_given = false;
  std::size_t mc_samples = 0;
  unsigned vworkers = 1;
  std::string verify_out;
  bool tamper = false;
  verify->add_option("--suite", suite_name, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--seed", vseed, "RNG seed")->each([&](const std::string&) { vseed_given = true; });
  verify->add_option("--mc-samples", mc_samples, "base Monte Carlo sample count")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{100000000}));
  verify->add_option("--workers", vworkers, "worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--out", verify_out, "JSON report path (stdout when omitted)");
  verify->add_flag("--tamper", tamper)->group("");  // test hook: forces tolerances to zero

  try {
    app.parse(argc, argv);

    if (sample->parsed())
      return run_sample(parse_ensemble(ensemble), size, count, seed_given ? seed : default_seed(),
                        workers, out_path);

    if (table->parsed()) {
      const Grid grid = parse_grid(grid_text);
      std::optional<Grid> grid2;
      if (!grid2_text.empty()) grid2 = parse_grid(grid2_text);
      return run_table(what, parse_ensemble(table_ensemble), grid, grid2, table_out);
    }

    splitmat::VerifyConfig cfg;
    cfg.full = suite_name == "full";
    cfg.seed = vseed_given ? vseed : default_seed();
    cfg.mc_samples = mc_samples;
    cfg.workers = vworkers;
    cfg.tamper = tamper;
    return run_verify_cmd(cfg, suite_name, verify_out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
