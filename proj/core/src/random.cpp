#include "wfinite/random.hpp"

#include <cmath>

namespace wfinite {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

SpikeSeed SpikeSeed::substream(std::uint64_t index) const noexcept {
  return {seed, splitmix64(splitmix64(stream) ^ (index + 0x632BE59BD9B4E019ull))};
}

Engine::Engine(SpikeSeed seed) noexcept {
  std::uint64_t state = splitmix64(seed.seed) ^ splitmix64(~seed.stream);
  for (auto& word : s_) {
    state += 0x9E3779B97F4A7C15ull;
    word = splitmix64(state);
  }
}

Engine::result_type Engine::operator()() noexcept {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Engine::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double Engine::exponential() noexcept {
  // 1 - U lies in (0, 1], so the log is finite.
  return -std::log1p(-uniform());
}

}  // namespace wfinite
