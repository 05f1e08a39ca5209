#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>
#include <vector>

namespace lnc {

/// Random stream keyed by a seed and a tuple of indices, so any (seed, keys) stream can be
/// regenerated independently of evaluation order or thread count.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::seed_seq seq = make_seq(seed, keys);
    eng_.seed(seq);
  }

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_); }

  /// Circular complex Gaussian with E|z|^2 = variance, via Box-Muller.
  std::complex<double> complex_gaussian(double variance) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-variance * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  static std::seed_seq make_seq(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (std::uint64_t k : keys) {
      words.push_back(static_cast<std::uint32_t>(k));
      words.push_back(static_cast<std::uint32_t>(k >> 32));
    }
    return std::seed_seq(words.begin(), words.end());
  }

  std::mt19937_64 eng_;
};

}  // namespace lnc
