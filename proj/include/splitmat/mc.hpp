#pragma once

// Deterministic fan-out for Monte Carlo runs.  The sample range is cut into
// fixed-width chunks; chunk c always draws from RngStream(seed, base + c)
// and results are folded in chunk order, so output is a pure function of
// (seed, count, width) regardless of how many workers execute the chunks.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "splitmat/rng.hpp"

namespace splitmat {

struct McPlan {
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::uint64_t stream_base = 0;   // offset so phases of a run use disjoint streams
  std::size_t substream_width = 1024;
  unsigned workers = 1;
};

// fn(chunk_index, rng, samples_in_chunk) -> ChunkResult; results returned in
// chunk order.
template <typename ChunkResult, typename Fn>
std::vector<ChunkResult> run_chunked(const McPlan& plan, Fn fn) {
  if (plan.substream_width < 1) throw std::invalid_argument("run_chunked: width must be positive");
  const std::size_t n_chunks = (plan.count + plan.substream_width - 1) / plan.substream_width;
  std::vector<ChunkResult> results(n_chunks);

  auto run_one = [&](std::size_t c) {
    RngStream rng(plan.seed, plan.stream_base + c);
    const std::size_t begin = c * plan.substream_width;
    const std::size_t end = std::min(plan.count, begin + plan.substream_width);
    results[c] = fn(c, rng, end - begin);
  };

  if (plan.workers <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_one(c);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        run_one(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n_threads = std::min<unsigned>(plan.workers, static_cast<unsigned>(n_chunks));
  pool.reserve(n_threads);
  for (unsigned w = 0; w < n_threads; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace splitmat
