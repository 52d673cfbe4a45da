#ifndef POLYPART_RNG_HPP
#define POLYPART_RNG_HPP

#include <cstdint>

namespace polypart {

// splitmix64: tiny, seedable, and cheap to re-key per cell. All sampling in
// the library goes through this so runs are reproducible bit-for-bit.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// stable derived seed for per-cell / per-row streams
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (salt + 1)));
  return mix.next();
}

}  // namespace polypart

#endif
