#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "splitmat/mc.hpp"
#include "splitmat/rng.hpp"

using namespace splitmat;

TEST_CASE("identical (seed, stream) pairs reproduce the same draws") {
  RngStream a(123, 5);
  RngStream b(123, 5);
  for (int t = 0; t < 1000; ++t) CHECK(a.uniform() == b.uniform());
  for (int t = 0; t < 1000; ++t) CHECK(a.normal() == b.normal());
}

TEST_CASE("different streams of one seed decorrelate") {
  RngStream a(123, 0);
  RngStream b(123, 1);
  int agree = 0;
  std::vector<double> xs(2000), ys(2000);
  for (int t = 0; t < 2000; ++t) {
    xs[t] = a.uniform();
    ys[t] = b.uniform();
    if (xs[t] == ys[t]) ++agree;
  }
  CHECK(agree == 0);

  double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  for (int t = 0; t < 2000; ++t) {
    sx += xs[t];
    sy += ys[t];
    sxy += xs[t] * ys[t];
    sxx += xs[t] * xs[t];
    syy += ys[t] * ys[t];
  }
  const double n = 2000.0;
  const double corr = (sxy - sx * sy / n) /
                      std::sqrt((sxx - sx * sx / n) * (syy - sy * sy / n));
  CHECK(std::abs(corr) < 0.1);
}

TEST_CASE("different seeds decorrelate within one stream index") {
  RngStream a(1, 0);
  RngStream b(2, 0);
  int agree = 0;
  for (int t = 0; t < 2000; ++t)
    if (a.uniform() == b.uniform()) ++agree;
  CHECK(agree == 0);
}

TEST_CASE("uniform draws live in [0, 1)") {
  RngStream rng(77, 0);
  for (int t = 0; t < 10000; ++t) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal draws have the requested moments") {
  RngStream rng(5, 3);
  const int n = 200000;
  double sum = 0, sum_sq = 0, sum_cube = 0;
  for (int t = 0; t < n; ++t) {
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
    sum_cube += x * x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  // standard errors at n = 2e5: mean 0.0022, var 0.0032, third moment 0.0087
  CHECK(std::abs(mean) < 0.011);
  CHECK(std::abs(var - 1.0) < 0.016);
  CHECK(std::abs(sum_cube / n) < 0.044);

  RngStream scaled(5, 4);
  double ssq = 0;
  for (int t = 0; t < n; ++t) {
    const double x = scaled.normal(0.5);
    ssq += x * x;
  }
  CHECK(std::abs(ssq / n - 0.25) < 0.004);
}

TEST_CASE("splitmix64 matches the published reference sequence") {
  // first three outputs for state 1234567 (Vigna's reference implementation)
  std::uint64_t state = 1234567;
  CHECK(splitmix64(state) == 6457827717110365317ull);
  CHECK(splitmix64(state) == 3203168211198807973ull);
  CHECK(splitmix64(state) == 9817491932198370423ull);
}

TEST_CASE("run_chunked partitions the count into fixed-width chunks") {
  McPlan plan;
  plan.count = 2500;
  plan.seed = 9;
  plan.substream_width = 1024;

  const auto sizes = run_chunked<std::size_t>(
      plan, [](std::size_t, RngStream&, std::size_t m) { return m; });
  REQUIRE(sizes.size() == 3);
  CHECK(sizes[0] == 1024);
  CHECK(sizes[1] == 1024);
  CHECK(sizes[2] == 452);
}

TEST_CASE("run_chunked results do not depend on the worker count") {
  McPlan base;
  base.count = 50000;
  base.seed = 31;
  base.stream_base = 400;

  auto chunk_sum = [](std::size_t, RngStream& rng, std::size_t m) {
    double s = 0;
    for (std::size_t t = 0; t < m; ++t) s += rng.normal();
    return s;
  };

  McPlan serial = base;
  serial.workers = 1;
  McPlan parallel = base;
  parallel.workers = 7;

  const auto a = run_chunked<double>(serial, chunk_sum);
  const auto b = run_chunked<double>(parallel, chunk_sum);
  REQUIRE(a.size() == b.size());
  for (std::size_t c = 0; c < a.size(); ++c) CHECK(a[c] == b[c]);

  // folding in chunk order gives a bit-stable total
  const double total_a = std::accumulate(a.begin(), a.end(), 0.0);
  const double total_b = std::accumulate(b.begin(), b.end(), 0.0);
  CHECK(total_a == total_b);
}

TEST_CASE("run_chunked hands each chunk its own stream") {
  McPlan plan;
  plan.count = 4096;
  plan.seed = 12;
  plan.stream_base = 50;
  plan.workers = 3;

  const auto firsts = run_chunked<double>(
      plan, [](std::size_t, RngStream& rng, std::size_t) { return rng.uniform(); });
  REQUIRE(firsts.size() == 4);
  for (std::size_t c = 0; c < firsts.size(); ++c) {
    RngStream expected(12, 50 + c);
    CHECK(firsts[c] == expected.uniform());
  }
}

TEST_CASE("run_chunked propagates worker exceptions") {
  McPlan plan;
  plan.count = 8192;
  plan.workers = 4;
  auto boom = [](std::size_t c, RngStream&, std::size_t) -> int {
    if (c == 5) throw std::runtime_error("chunk failure");
    return 0;
  };
  CHECK_THROWS_AS(run_chunked<int>(plan, boom), std::runtime_error);

  plan.substream_width = 0;
  CHECK_THROWS_AS(run_chunked<int>(plan, boom), std::invalid_argument);
}
