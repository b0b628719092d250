#ifndef BEMWE_RNG_HPP
#define BEMWE_RNG_HPP

#include <cstdint>
#include <random>

namespace bemwe {

/// Caller-owned uniform random stream. Samplers take a stream by reference;
/// the same seed always reproduces the same sequence bit for bit, so the
/// variate mapping avoids std::uniform_real_distribution (whose output is
/// implementation defined).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw strictly inside (0, 1): 53 mantissa bits, offset by half an ulp.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bemwe

#endif
