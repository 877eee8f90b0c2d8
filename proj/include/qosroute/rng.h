#ifndef QOSROUTE_RNG_H_
#define QOSROUTE_RNG_H_

#include <cstdint>

namespace qosroute {

// SplitMix64. The output sequence is fixed by the constants below and is
// identical on every platform, which is what makes generated topologies and
// query lists reproducible byte for byte.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t Next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // draw / 2^64, in [0, 1).
  double NextUnit() noexcept {
    return static_cast<double>(Next()) * 0x1.0p-64;
  }

  constexpr std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace qosroute

#endif  // QOSROUTE_RNG_H_
