#ifndef RESKIT_RNG_HPP
#define RESKIT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace reskit {

// SplitMix64 (Steele, Lea & Vigna 2014): the state advances by the golden
// gamma and each output is the mix of the state. Being effectively
// counter-based, any substream is reproducible from (seed, stream index)
// alone, which is what keeps parallel replicates deterministic.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Substream k of a master seed starts from mix(seed + (k+1) * gamma).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL));
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1); safe under log().
  double uniform_pos() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller, cosine branch. Consumes two uniforms
  // per variate; the sine twin is discarded to keep the stream position a
  // pure function of the draw count.
  double normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

  double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

 private:
  std::uint64_t state_;
};

}  // namespace reskit

#endif
