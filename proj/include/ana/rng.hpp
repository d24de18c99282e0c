#ifndef ANA_RNG_HPP
#define ANA_RNG_HPP

#include <cstdint>
#include <random>

namespace ana {

/// Seed mixer used to derive independent sub-streams (per slot, per trial)
/// from one root seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t deriveSeed(std::uint64_t root, std::uint64_t stream) {
  return splitmix64(root ^ splitmix64(stream + 1));
}

/// Deterministic cross-platform RNG. std::uniform_int_distribution is
/// implementation-defined, so bounded draws use mask-and-reject instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll((bound - 1) | 1);
    while (true) {
      std::uint64_t v = eng_() & mask;
      if (v < bound) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ana

#endif
