#include "diamondplot/random.hpp"

#include <cmath>
#include <numbers>

#include "diamondplot/error.hpp"

namespace diamondplot {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
}

Xoshiro256 Xoshiro256::from_state(const std::array<std::uint64_t, 4>& state) noexcept {
  Xoshiro256 g;
  g.s_ = state;
  return g;
}

Xoshiro256::result_type Xoshiro256::operator()() noexcept {
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

double Xoshiro256::uniform() noexcept {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double NormalSource::next() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = 1.0 - rng_.uniform();
  const double u2 = rng_.uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(theta);
  has_cached_ = true;
  return radius * std::cos(theta);
}

void validate(const BivariateNormalSpec& spec) {
  if (!(spec.sd1 > 0.0) || !(spec.sd2 > 0.0) || !std::isfinite(spec.sd1) ||
      !std::isfinite(spec.sd2)) {
    throw Error(ErrorCode::InvalidArgument,
                "standard deviations must be positive and finite");
  }
  if (!(std::abs(spec.rho) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "correlation must lie in (-1, 1)");
  }
  if (!std::isfinite(spec.mean1) || !std::isfinite(spec.mean2)) {
    throw Error(ErrorCode::InvalidArgument, "means must be finite");
  }
  if (spec.n < 1) {
    throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
  }
}

DataSet sample_bivariate_normal(const BivariateNormalSpec& spec,
                                std::string label1, std::string label2) {
  validate(spec);
  const double tail = std::sqrt(1.0 - spec.rho * spec.rho);
  NormalSource normals(spec.seed);
  DataSet out;
  out.label1 = std::move(label1);
  out.label2 = std::move(label2);
  out.source = "generated:bivariate-normal";
  out.values.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const double z1 = normals.next();
    const double z2 = normals.next();
    out.values.push_back({spec.mean1 + spec.sd1 * z1,
                          spec.mean2 + spec.sd2 * (spec.rho * z1 + tail * z2)});
  }
  return out;
}

}  // namespace diamondplot
