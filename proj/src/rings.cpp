#include "lnc/rings.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

namespace lnc {

namespace {

constexpr std::array<Integer, 2> kIntUnits{Integer{1}, Integer{-1}};
constexpr std::array<GaussInt, 4> kGaussUnits{GaussInt{1, 0}, GaussInt{0, 1}, GaussInt{-1, 0},
                                              GaussInt{0, -1}};
constexpr std::array<EisenInt, 6> kEisenUnits{EisenInt{1, 0},  EisenInt{1, 1},   EisenInt{0, 1},
                                              EisenInt{-1, 0}, EisenInt{-1, -1}, EisenInt{0, -1}};

i128 abs128(i128 x) { return x < 0 ? -x : x; }

// Candidate quotients are the floor/ceil corners of the exact quotient coordinates
// x / den and y / den. For the square and hexagonal lattices the nearest lattice
// point always lies among these corners.
template <class T, class Rem>
T pick_quotient(i128 x, i128 y, i128 den, Rem remainder_norm) {
  const std::array<i128, 2> xs{checked::floor_div(x, den), checked::ceil_div(x, den)};
  const std::array<i128, 2> ys{checked::floor_div(y, den), checked::ceil_div(y, den)};
  bool have = false;
  i128 best_norm = 0;
  T best{};
  for (i128 cx : xs)
    for (i128 cy : ys) {
      T q{checked::narrow(cx), checked::narrow(cy)};
      i128 nrm = remainder_norm(q);
      if (!have || nrm < best_norm || (nrm == best_norm && q < best)) {
        have = true;
        best_norm = nrm;
        best = q;
      }
    }
  return best;
}

}  // namespace

std::span<const Integer> units(Integer) { return kIntUnits; }
std::span<const GaussInt> units(GaussInt) { return kGaussUnits; }
std::span<const EisenInt> units(EisenInt) { return kEisenUnits; }

bool is_canonical(Integer x) { return x.v >= 0; }
bool is_canonical(GaussInt x) { return (x.re > 0 && x.im >= 0) || (x.re == 0 && x.im == 0); }
bool is_canonical(EisenInt x) { return (x.b >= 0 && x.a > x.b) || (x.a == 0 && x.b == 0); }

Integer round_div(Integer a, Integer b) {
  if (b.v == 0) throw std::domain_error("division by zero");
  i128 lo = checked::floor_div(a.v, b.v);
  i128 hi = checked::ceil_div(a.v, b.v);
  i128 rlo = abs128(static_cast<i128>(a.v) - lo * b.v);
  i128 rhi = abs128(static_cast<i128>(a.v) - hi * b.v);
  return checked::narrow(rhi < rlo ? hi : lo);
}

GaussInt round_div(GaussInt a, GaussInt b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  // a * conj(b) / norm(b)
  i128 x = static_cast<i128>(a.re) * b.re + static_cast<i128>(a.im) * b.im;
  i128 y = static_cast<i128>(a.im) * b.re - static_cast<i128>(a.re) * b.im;
  return pick_quotient<GaussInt>(x, y, norm(b), [&](GaussInt q) {
    i128 rr = static_cast<i128>(a.re) - (static_cast<i128>(q.re) * b.re - static_cast<i128>(q.im) * b.im);
    i128 ri = static_cast<i128>(a.im) - (static_cast<i128>(q.re) * b.im + static_cast<i128>(q.im) * b.re);
    return rr * rr + ri * ri;
  });
}

EisenInt round_div(EisenInt a, EisenInt b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  // a * conj(b), conj(c + d w) = (c - d) - d w
  const i128 ca = static_cast<i128>(b.a) - b.b;
  const i128 cb = -static_cast<i128>(b.b);
  const i128 bd = static_cast<i128>(a.b) * cb;
  const i128 x = static_cast<i128>(a.a) * ca - bd;
  const i128 y = static_cast<i128>(a.a) * cb + static_cast<i128>(a.b) * ca - bd;
  return pick_quotient<EisenInt>(x, y, norm(b), [&](EisenInt q) {
    const i128 qb = static_cast<i128>(q.b) * b.b;
    const i128 pa = static_cast<i128>(q.a) * b.a - qb;
    const i128 pb = static_cast<i128>(q.a) * b.b + static_cast<i128>(q.b) * b.a - qb;
    const i128 ra = static_cast<i128>(a.a) - pa;
    const i128 rb = static_cast<i128>(a.b) - pb;
    return ra * ra - ra * rb + rb * rb;
  });
}

bool is_prime_integer(i128 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (i128 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime(Integer z) {
  if (z.v == 0) throw std::invalid_argument("primality of zero");
  return is_prime_integer(abs128(z.v));
}

bool gaussian_is_prime(GaussInt z) {
  if (is_zero(z)) throw std::invalid_argument("primality of zero");
  const i128 a = abs128(z.re);
  const i128 b = abs128(z.im);
  if (a == 1 && b == 1) return true;
  if (a == 0 || b == 0) {
    const i128 m = a + b;
    return m % 4 == 3 && is_prime_integer(m);
  }
  const i128 n = a * a + b * b;
  return n % 4 == 1 && is_prime_integer(n);
}

bool eisenstein_is_prime(EisenInt z) {
  if (is_zero(z)) throw std::invalid_argument("primality of zero");
  const EisenInt c = canonical(z);
  if (c.b == 0 && c.a % 3 == 2 && is_prime_integer(c.a)) return true;
  return is_prime_integer(norm(z));
}

GaussInt round_to_ring(cplx x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw std::invalid_argument("round_to_ring of non-finite value");
  const double r = round_half_down(x.real());
  const double i = round_half_down(x.imag());
  constexpr double lim = 9.2e18;
  if (std::abs(r) > lim || std::abs(i) > lim) throw std::overflow_error("round_to_ring out of range");
  return {static_cast<i64>(r), static_cast<i64>(i)};
}

namespace {

template <class T, class Make>
std::vector<T> leaders(const T& pi, Make make) {
  if (is_zero(pi)) throw std::invalid_argument("zero modulus");
  const T m = canonical(pi);
  const auto bound = static_cast<i64>(2.0 * std::sqrt(static_cast<double>(norm(m)))) + 2;
  std::set<T> out;
  for (i64 x = -bound; x <= bound; ++x)
    for (i64 y = -bound; y <= bound; ++y) {
      auto v = make(x, y);
      if (!v) continue;
      out.insert(Residue<T>::reduce(*v, m));
    }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Integer> coset_leaders(Integer pi) {
  return leaders<Integer>(pi, [](i64 x, i64 y) -> std::optional<Integer> {
    if (y != 0) return std::nullopt;
    return Integer{x};
  });
}
std::vector<GaussInt> coset_leaders(GaussInt pi) {
  return leaders<GaussInt>(pi, [](i64 x, i64 y) -> std::optional<GaussInt> { return GaussInt{x, y}; });
}
std::vector<EisenInt> coset_leaders(EisenInt pi) {
  return leaders<EisenInt>(pi, [](i64 x, i64 y) -> std::optional<EisenInt> { return EisenInt{x, y}; });
}

std::string to_string(Integer x) { return std::to_string(x.v); }

std::string to_string(GaussInt x) {
  if (x.im == 0) return std::to_string(x.re);
  std::ostringstream os;
  if (x.re != 0) os << x.re << (x.im > 0 ? "+" : "");
  if (x.im == -1) os << "-";
  else if (x.im != 1) os << x.im;
  os << "i";
  return os.str();
}

std::string to_string(EisenInt x) {
  if (x.b == 0) return std::to_string(x.a);
  std::ostringstream os;
  if (x.a != 0) os << x.a << (x.b > 0 ? "+" : "");
  if (x.b == -1) os << "-";
  else if (x.b != 1) os << x.b;
  os << "w";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, Integer x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, GaussInt x) { return os << to_string(x); }
std::ostream& operator<<(std::ostream& os, EisenInt x) { return os << to_string(x); }

}  // namespace lnc
