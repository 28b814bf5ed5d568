#pragma once

// Deterministic random number generation. Samplers split their work into
// fixed-size chunks; each chunk gets its own engine seeded from
// (user seed, stream tag, chunk index) via SplitMix64, so serial and parallel
// execution produce identical output for a given seed and chunk size.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>
#include <vector>

#include "reliab/math.hpp"

namespace reliab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derives a stream seed from a base seed and up to two stream coordinates.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t chunk = 0) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= stream * 0xda942042e4dd58b5ull;
  std::uint64_t b = splitmix64(s);
  s ^= chunk * 0x2545f4914f6cdd1dull;
  return a ^ b ^ splitmix64(s);
}

// Uniform and normal draws backed by mt19937_64. Uniforms land in the open
// interval (0,1) so quantile transforms never see an exact boundary; normals
// go through the inverse CDF to stay reproducible across standard libraries.
class ChunkRng {
 public:
  explicit ChunkRng(std::uint64_t seed) : engine_(seed) {}

  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return normal_quantile(uniform_open()); }

 private:
  std::mt19937_64 engine_;
};

constexpr std::size_t kDefaultChunkSize = 8192;

// Worker count: RELIAB_THREADS if set (>=1), otherwise hardware concurrency.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("RELIAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

// Runs fn(chunk_index, first, count) over [0, total) split into chunks.
// Chunks are distributed over threads; fn must write only to per-chunk state.
template <typename Fn>
void for_each_chunk(std::size_t total, std::size_t chunk_size, Fn&& fn) {
  if (total == 0) return;
  const std::size_t n_chunks = (total + chunk_size - 1) / chunk_size;
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(thread_cap(), n_chunks));
  if (n_threads <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) {
      const std::size_t first = c * chunk_size;
      fn(c, first, std::min(chunk_size, total - first));
    }
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (unsigned w = 0; w < n_threads; ++w) {
    workers.emplace_back([&, w]() {
      for (std::size_t c = w; c < n_chunks; c += n_threads) {
        const std::size_t first = c * chunk_size;
        fn(c, first, std::min(chunk_size, total - first));
      }
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace reliab
