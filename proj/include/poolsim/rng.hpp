#pragma once

#include <cmath>
#include <cstdint>

namespace poolsim {

/// Counter-based per-round random stream.
///
/// Each (seed, round_index) pair opens an independent SplitMix64 stream, so a
/// round's randomness never depends on which worker simulated it or on how
/// many rounds ran before it. That is the whole cross-worker determinism
/// contract of the simulator.
class RoundRng {
 public:
  RoundRng(std::uint64_t seed, std::uint64_t round_index)
      : state_(mix64(seed ^ mix64(round_index * kGamma + 0x6A09E667F3BCC909ULL))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix64(state_);
  }

  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1]; safe as a log() argument.
  double next_unit_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Exponential with rate 1.
  double next_exp() { return -std::log(next_unit_pos()); }

  bool next_bernoulli(double p) { return next_unit() < p; }

  /// Geometric on {1, 2, ...} with success probability p: number of trials up
  /// to and including the first success.
  std::uint64_t next_geometric(double p) {
    if (p >= 1.0) return 1;
    const double u = next_unit_pos();
    const double k = std::floor(std::log(u) / std::log1p(-p));
    return 1 + static_cast<std::uint64_t>(k);
  }

  static std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

}  // namespace poolsim
