#pragma once

// Verification suite: one numeric check per claim the library makes, each
// with an observed value, an expected value, and a tolerance.  The fast
// suite shrinks Monte Carlo counts and widens the statistical tolerances
// accordingly; exact (non-statistical) tolerances never change.

#include <cstdint>
#include <string>
#include <vector>

namespace splitmat {

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifyConfig {
  bool full = false;            // full multiplies sample counts up to the reference sizes
  std::uint64_t seed = 1;
  std::size_t mc_samples = 0;   // 0 picks the suite default (2e4 fast, 2e5 full)
  unsigned workers = 1;
  bool tamper = false;          // test hook: forces every tolerance to zero
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass = false;
  std::uint64_t seed = 1;
  std::size_t base_samples = 0;
  unsigned workers = 1;
  bool full = false;
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace splitmat
