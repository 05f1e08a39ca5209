#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace lnc {

using i64 = std::int64_t;
using i128 = __int128;
using cplx = std::complex<double>;

namespace checked {

inline i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}
inline i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}
inline i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}
inline i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("integer overflow in narrowing");
  return static_cast<i64>(v);
}
inline i128 sq(i64 a) { return static_cast<i128>(a) * a; }

// floor(a / b) and ceil(a / b) for b != 0
inline i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

}  // namespace checked

/// Rational integers.
struct Integer {
  i64 v = 0;

  constexpr Integer() = default;
  constexpr Integer(i64 x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend constexpr bool operator==(Integer, Integer) = default;
  friend constexpr auto operator<=>(Integer, Integer) = default;

  friend Integer operator+(Integer x, Integer y) { return checked::add(x.v, y.v); }
  friend Integer operator-(Integer x, Integer y) { return checked::sub(x.v, y.v); }
  friend Integer operator*(Integer x, Integer y) { return checked::mul(x.v, y.v); }
  Integer operator-() const { return checked::sub(0, v); }
  Integer& operator+=(Integer o) { return *this = *this + o; }
  Integer& operator-=(Integer o) { return *this = *this - o; }
  Integer& operator*=(Integer o) { return *this = *this * o; }
};

/// Gaussian integers re + im*i.
struct GaussInt {
  i64 re = 0;
  i64 im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(i64 r) : re(r) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussInt(i64 r, i64 i) : re(r), im(i) {}

  friend constexpr bool operator==(GaussInt, GaussInt) = default;
  friend constexpr auto operator<=>(GaussInt, GaussInt) = default;

  friend GaussInt operator+(GaussInt x, GaussInt y) {
    return {checked::add(x.re, y.re), checked::add(x.im, y.im)};
  }
  friend GaussInt operator-(GaussInt x, GaussInt y) {
    return {checked::sub(x.re, y.re), checked::sub(x.im, y.im)};
  }
  friend GaussInt operator*(GaussInt x, GaussInt y) {
    i128 r = static_cast<i128>(x.re) * y.re - static_cast<i128>(x.im) * y.im;
    i128 i = static_cast<i128>(x.re) * y.im + static_cast<i128>(x.im) * y.re;
    return {checked::narrow(r), checked::narrow(i)};
  }
  GaussInt operator-() const { return {checked::sub(0, re), checked::sub(0, im)}; }
  GaussInt& operator+=(GaussInt o) { return *this = *this + o; }
  GaussInt& operator-=(GaussInt o) { return *this = *this - o; }
  GaussInt& operator*=(GaussInt o) { return *this = *this * o; }
};

/// Eisenstein integers a + b*w with w = exp(2 pi i / 3).
struct EisenInt {
  i64 a = 0;
  i64 b = 0;

  constexpr EisenInt() = default;
  constexpr EisenInt(i64 x) : a(x) {}  // NOLINT(google-explicit-constructor)
  constexpr EisenInt(i64 x, i64 y) : a(x), b(y) {}

  friend constexpr bool operator==(EisenInt, EisenInt) = default;
  friend constexpr auto operator<=>(EisenInt, EisenInt) = default;

  friend EisenInt operator+(EisenInt x, EisenInt y) {
    return {checked::add(x.a, y.a), checked::add(x.b, y.b)};
  }
  friend EisenInt operator-(EisenInt x, EisenInt y) {
    return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)};
  }
  // w^2 = -1 - w
  friend EisenInt operator*(EisenInt x, EisenInt y) {
    i128 bd = static_cast<i128>(x.b) * y.b;
    i128 r = static_cast<i128>(x.a) * y.a - bd;
    i128 w = static_cast<i128>(x.a) * y.b + static_cast<i128>(x.b) * y.a - bd;
    return {checked::narrow(r), checked::narrow(w)};
  }
  EisenInt operator-() const { return {checked::sub(0, a), checked::sub(0, b)}; }
  EisenInt& operator+=(EisenInt o) { return *this = *this + o; }
  EisenInt& operator-=(EisenInt o) { return *this = *this - o; }
  EisenInt& operator*=(EisenInt o) { return *this = *this * o; }
};

// ---- norms, conjugates, embeddings ----

inline i128 norm(Integer x) { return checked::sq(x.v); }
inline i128 norm(GaussInt x) { return checked::sq(x.re) + checked::sq(x.im); }
inline i128 norm(EisenInt x) {
  return checked::sq(x.a) - static_cast<i128>(x.a) * x.b + checked::sq(x.b);
}

inline Integer conj(Integer x) { return x; }
inline GaussInt conj(GaussInt x) { return {x.re, checked::sub(0, x.im)}; }
inline EisenInt conj(EisenInt x) { return {checked::sub(x.a, x.b), checked::sub(0, x.b)}; }

inline cplx to_complex(Integer x) { return {static_cast<double>(x.v), 0.0}; }
inline cplx to_complex(GaussInt x) { return {static_cast<double>(x.re), static_cast<double>(x.im)}; }
inline cplx to_complex(EisenInt x) {
  constexpr double h = 0.86602540378443864676;
  return {static_cast<double>(x.a) - 0.5 * static_cast<double>(x.b), h * static_cast<double>(x.b)};
}

template <class T>
bool is_zero(const T& x) {
  return x == T{};
}
template <class T>
bool is_unit(const T& x) {
  return norm(x) == 1;
}

// ---- units and canonical associates ----

std::span<const Integer> units(Integer);
std::span<const GaussInt> units(GaussInt);
std::span<const EisenInt> units(EisenInt);

template <class T>
std::span<const T> ring_units() {
  return units(T{});
}

bool is_canonical(Integer x);
bool is_canonical(GaussInt x);
bool is_canonical(EisenInt x);

/// Unit u with u*x canonical (1 for x = 0).
template <class T>
T canonical_unit(const T& x) {
  if (is_zero(x)) return T{1};
  for (const T& u : ring_units<T>())
    if (is_canonical(u * x)) return u;
  throw std::logic_error("no canonical associate found");
}

template <class T>
T canonical(const T& x) {
  return canonical_unit(x) * x;
}

/// Inverse of a unit.
template <class T>
T unit_inverse(const T& u) {
  for (const T& v : ring_units<T>())
    if (v * u == T{1}) return v;
  throw std::domain_error("element is not a unit");
}

// ---- rounding division ----

/// Quotient q minimizing norm(a - q*b); ties go to the lexicographically smallest q.
Integer round_div(Integer a, Integer b);
GaussInt round_div(GaussInt a, GaussInt b);
EisenInt round_div(EisenInt a, EisenInt b);

/// Exact quotient; throws if b does not divide a.
template <class T>
T div_exact(const T& a, const T& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  T q = round_div(a, b);
  if (q * b != a) throw std::domain_error("inexact division");
  return q;
}

template <class T>
bool divides(const T& d, const T& x) {
  if (is_zero(d)) return is_zero(x);
  return round_div(x, d) * d == x;
}

template <class T>
concept EuclideanRing = requires(T x, T y) {
  { x + y } -> std::same_as<T>;
  { x - y } -> std::same_as<T>;
  { x * y } -> std::same_as<T>;
  { -x } -> std::same_as<T>;
  { norm(x) } -> std::same_as<i128>;
  { conj(x) } -> std::same_as<T>;
  { round_div(x, y) } -> std::same_as<T>;
  { to_complex(x) } -> std::same_as<cplx>;
  { is_canonical(x) } -> std::same_as<bool>;
};

template <class T>
struct GcdResult {
  T g;
  T s;
  T t;
};

/// s*a + t*b = g with g a canonical gcd.
template <EuclideanRing T>
GcdResult<T> ext_gcd(const T& a, const T& b) {
  if (is_zero(a) && is_zero(b)) throw std::invalid_argument("ext_gcd of (0, 0)");
  T r0 = a, r1 = b;
  T s0{1}, s1{0}, t0{0}, t1{1};
  while (!is_zero(r1)) {
    T q = round_div(r0, r1);
    T r2 = r0 - q * r1;
    T s2 = s0 - q * s1;
    T t2 = t0 - q * t1;
    r0 = r1, r1 = r2;
    s0 = s1, s1 = s2;
    t0 = t1, t1 = t2;
  }
  T u = canonical_unit(r0);
  return {u * r0, u * s0, u * t0};
}

// ---- primality ----

bool is_prime_integer(i128 n);
bool gaussian_is_prime(GaussInt z);
bool eisenstein_is_prime(EisenInt z);
bool is_prime(Integer z);
inline bool is_prime(GaussInt z) { return gaussian_is_prime(z); }
inline bool is_prime(EisenInt z) { return eisenstein_is_prime(z); }

// ---- rounding from C ----

/// Round-half-down on a single axis.
inline double round_half_down(double x) { return std::ceil(x - 0.5); }

/// Nearest Gaussian integer, ties toward -inf on each axis.
GaussInt round_to_ring(cplx x);

// ---- quotient rings ----

/// Coset x + <m>, stored by its minimal-norm representative.
template <EuclideanRing T>
class Residue {
 public:
  Residue() = default;
  Residue(const T& x, const T& modulus) : mod_(canonical(modulus)) {
    if (lnc::is_zero(modulus)) throw std::invalid_argument("zero modulus");
    value_ = reduce(x, mod_);
  }

  static T reduce(const T& x, const T& m) { return x - round_div(x, m) * m; }

  const T& value() const { return value_; }
  const T& modulus() const { return mod_; }
  bool is_zero() const { return lnc::is_zero(value_); }

  /// True when the coset is invertible in T/<m>.
  bool is_unit() const {
    if (lnc::is_zero(value_)) return lnc::is_unit(mod_);
    return ext_gcd(value_, mod_).g == T{1};
  }
  Residue inverse() const {
    if (lnc::is_unit(mod_)) return *this;
    if (lnc::is_zero(value_)) throw std::domain_error("zero is not invertible");
    auto [g, s, t] = ext_gcd(value_, mod_);
    if (g != T{1}) throw std::domain_error("residue is a zero divisor");
    return Residue(s, mod_);
  }

  friend bool operator==(const Residue&, const Residue&) = default;

  friend Residue operator+(const Residue& x, const Residue& y) {
    check(x, y);
    return Residue(x.value_ + y.value_, x.mod_);
  }
  friend Residue operator-(const Residue& x, const Residue& y) {
    check(x, y);
    return Residue(x.value_ - y.value_, x.mod_);
  }
  friend Residue operator*(const Residue& x, const Residue& y) {
    check(x, y);
    return Residue(x.value_ * y.value_, x.mod_);
  }
  friend Residue operator*(const T& c, const Residue& x) { return Residue(c * x.value_, x.mod_); }
  Residue operator-() const { return Residue(-value_, mod_); }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

 private:
  static void check(const Residue& x, const Residue& y) {
    if (x.mod_ != y.mod_) throw std::invalid_argument("residue modulus mismatch");
  }

  T value_{};
  T mod_{1};
};

/// Natural projection T -> T/<pi>.
template <EuclideanRing T>
Residue<T> project_sigma(const T& z, const T& pi) {
  return Residue<T>(z, pi);
}

/// Minimal-norm lift T/<pi> -> T.
template <EuclideanRing T>
T lift_sigma(const Residue<T>& r) {
  return r.value();
}

/// Number of cosets |T/<pi>|.
template <EuclideanRing T>
i128 quotient_size(const T& pi) {
  if constexpr (std::is_same_v<T, Integer>) return pi.v < 0 ? -static_cast<i128>(pi.v) : pi.v;
  else return norm(pi);
}

/// All minimal-norm coset representatives of T/<pi>, sorted.
std::vector<Integer> coset_leaders(Integer pi);
std::vector<GaussInt> coset_leaders(GaussInt pi);
std::vector<EisenInt> coset_leaders(EisenInt pi);

// ---- formatting ----

std::string to_string(Integer x);
std::string to_string(GaussInt x);
std::string to_string(EisenInt x);
std::ostream& operator<<(std::ostream& os, Integer x);
std::ostream& operator<<(std::ostream& os, GaussInt x);
std::ostream& operator<<(std::ostream& os, EisenInt x);
template <EuclideanRing T>
std::ostream& operator<<(std::ostream& os, const Residue<T>& r) {
  return os << r.value() << " mod " << r.modulus();
}

template <class T>
constexpr const char* ring_name() {
  if constexpr (std::is_same_v<T, Integer>) return "Z";
  else if constexpr (std::is_same_v<T, GaussInt>) return "Zi";
  else return "Zw";
}

}  // namespace lnc
