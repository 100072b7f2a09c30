#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>

#include "diamondplot/dataset.hpp"

namespace diamondplot {

/// SplitMix64, used only to expand a 64-bit seed into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed) noexcept;

  /// Raw state, for reproducing reference sequences. Must not be all zero.
  static Xoshiro256 from_state(const std::array<std::uint64_t, 4>& state) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept;

 private:
  Xoshiro256() = default;

  std::array<std::uint64_t, 4> s_{};
};

/// Standard normal deviates by the Box-Muller transform; each pair of
/// uniforms yields two deviates, the second cached for the next call.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) noexcept : rng_(seed) {}
  double next() noexcept;

 private:
  Xoshiro256 rng_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

struct BivariateNormalSpec {
  double mean1 = 0.0;
  double mean2 = 0.0;
  double sd1 = 1.0;
  double sd2 = 1.0;
  double rho = 0.0;
  std::size_t n = 300;
  std::uint64_t seed = 42;
};

/// Throws InvalidArgument unless sd1, sd2 > 0, |rho| < 1 and n >= 1.
void validate(const BivariateNormalSpec& spec);

/// Deterministic for a fixed seed. Point i uses the i-th pair (z1, z2) of
/// standard normals through the Cholesky factor
/// [[sd1, 0], [sd2*rho, sd2*sqrt(1-rho^2)]].
DataSet sample_bivariate_normal(const BivariateNormalSpec& spec,
                                std::string label1 = "variable 1",
                                std::string label2 = "variable 2");

}  // namespace diamondplot
