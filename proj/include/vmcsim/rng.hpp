#pragma once

#include <cstdint>

namespace vmcsim {

// SplitMix64 (Steele, Lea, Flood 2014). Counter-based: the i-th output is
// mix64(seed + (i+1)*GAMMA), so streams support random access and substreams
// derived from distinct keys never collide in practice. All deterministic
// randomness in the simulator (traces, policy draws) comes through this.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGamma;
    return mix64(state_);
  }

  // Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  bool next_bernoulli(double p) { return next_unit() < p; }

  // Uniform integer in [0, n). Lemire multiply-shift; the O(1/2^64) bias is
  // irrelevant here and the draw count stays deterministic.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
(static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  static std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  // Key derivation for named substreams: order-sensitive, collision-resistant
  // enough for stream separation.
  static std::uint64_t combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (mix64(b) + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2)));
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t tag) {
    return SplitMix64(combine(seed, tag));
  }

  static SplitMix64 substream(std::uint64_t seed, std::uint64_t tag_a,
                              std::uint64_t tag_b) {
    return SplitMix64(combine(combine(seed, tag_a), tag_b));
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t state_;
};

// Stream tags (arbitrary distinct constants).
namespace stream_tag {
inline constexpr std::uint64_t kTrace = 0x7472616365ull;        // per-VM traces
inline constexpr std::uint64_t kPolicy = 0x706f6c696379ull;     // policy draws
inline constexpr std::uint64_t kScenario = 0x7363656eull;       // VM type mix
}  // namespace stream_tag

}  // namespace vmcsim
