#pragma once

#include <cstdint>
#include <limits>

namespace wfinite {

/// Identifies one reproducible random stream. Identical (seed, stream)
/// pairs reproduce identical draws; substreams are derived by hashing so
/// that trial t of quantity q never depends on how many trials ran before.
struct SpikeSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  SpikeSeed substream(std::uint64_t index) const noexcept;

  friend bool operator==(const SpikeSeed&, const SpikeSeed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// xoshiro256** seeded through splitmix64. Satisfies
/// UniformRandomBitGenerator, so the <random> distributions apply. Chosen
/// over std::mt19937_64 because a fresh engine is built for every trial
/// substream and mt19937_64 costs microseconds to seed.
class Engine {
 public:
  using result_type = std::uint64_t;

  explicit Engine(SpikeSeed seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Unit-rate exponential variate.
  double exponential() noexcept;

 private:
  std::uint64_t s_[4];
};

}  // namespace wfinite
