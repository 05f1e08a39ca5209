#pragma once

#include <cstdint>
#include <random>

#include "lnc/matrix.hpp"

namespace lnc::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20260401);
  return g;
}

inline i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }
inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

template <class T>
T random_element(i64 bound);

template <>
inline Integer random_element<Integer>(i64 bound) {
  return uniform(-bound, bound);
}
template <>
inline GaussInt random_element<GaussInt>(i64 bound) {
  return {uniform(-bound, bound), uniform(-bound, bound)};
}
template <>
inline EisenInt random_element<EisenInt>(i64 bound) {
  return {uniform(-bound, bound), uniform(-bound, bound)};
}

template <class T>
T random_nonzero(i64 bound) {
  for (;;) {
    T x = random_element<T>(bound);
    if (!is_zero(x)) return x;
  }
}

template <class T>
Matrix<T> random_matrix(std::size_t m, std::size_t n, i64 bound) {
  Matrix<T> a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_element<T>(bound);
  return a;
}

}  // namespace lnc::test
