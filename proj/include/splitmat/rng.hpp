#pragma once

// Seeded Gaussian streams.  A stream is identified by (seed, stream_id);
// Monte Carlo drivers give each fixed-width chunk of samples its own
// stream_id, so output never depends on how chunks are assigned to workers.
//
// The Gaussian method is fixed as part of the file-format contract:
// trigonometric Box-Muller on top of mt19937_64, one cached spare per pair.
// Changing the generator, the mixing function, or the draw order would
// silently change every sampled file, so all three are pinned here and
// covered by regression tests on frozen values.

#include <cmath>
#include <cstdint>
#include <random>

namespace splitmat {

// Standard 64-bit mix (splitmix64); used only to spread (seed, stream_id)
// into well-separated mt19937_64 seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
    const std::uint32_t words[8] = {
        static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
        static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
        static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
        static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state))};
    std::seed_seq seq(words, words + 8);
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller: u1 in (0, 1], u2 in [0, 1),
  // r = sqrt(-2 ln u1), returns r cos(2 pi u2) and caches r sin(2 pi u2).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double stddev) { return stddev * normal(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace splitmat
