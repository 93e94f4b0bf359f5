#pragma once

#include <cstdint>
#include <string_view>

namespace ontosim {

// SplitMix64. The generator is fixed (not std::mt19937 or anything
// implementation-defined) so seeded runs reproduce bit-for-bit across
// platforms and compilers.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n). Plain modulo; the bias is ~n/2^64 and the choice is
  /// part of the documented sampling algorithm.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Seed of the index-th substream of a master seed. Each Monte-Carlo sample
/// (and each method/cardinality pair) gets its own substream, so results are
/// independent of how the index space is split across workers.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return g.next();
}

/// FNV-1a, used to derive per-method substreams from method names.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace ontosim
