#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>

#include "ambient/matrix_ops.hpp"

namespace ambient {

/**
 * Counter-based Gaussian stream: splitmix64 over an advancing counter,
 * Box-Muller on top. One independent stream per named noise channel,
 * derived from (master seed, channel label). Bit-reproducible across
 * runs and platforms.
 */
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::string_view channel) : state_(seed) {
    for (const char ch : channel) {
      state_ = mix(state_ ^ static_cast<std::uint64_t>(static_cast<unsigned char>(ch)));
    }
  }

  double next() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * kPi * u2);
    has_cached_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Eigen::Vector3d next3() {
    Eigen::Vector3d out;
    for (int i = 0; i < 3; ++i) out(i) = next();
    return out;
  }

  Vec next_n(int n) {
    Vec out(n);
    for (int i = 0; i < n; ++i) out(i) = next();
    return out;
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t x) {
    std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; the +1 keeps log(u) finite.
  double next_uniform() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return static_cast<double>((z >> 11) + 1) * 0x1.0p-53;
  }

  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace ambient
