#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lnc/rings.hpp"

namespace lnc {

/// Packet over W = T/<pi_k> x ... x T/<pi_1> (largest modulus first). The first header_len
/// components form the header, the rest the payload.
template <EuclideanRing T>
struct ModulePacket {
  std::vector<Residue<T>> components;
  std::size_t header_len = 0;

  std::size_t size() const { return components.size(); }
  std::vector<T> moduli() const;
  std::span<const Residue<T>> header() const { return {components.data(), header_len}; }
  std::span<const Residue<T>> payload() const {
    return {components.data() + header_len, components.size() - header_len};
  }
  friend bool operator==(const ModulePacket&, const ModulePacket&) = default;
};

/// Source packet i (0-based) of m: header e_i, then the payload residues.
/// moduli lists every component's modulus, largest first; each must divide its predecessor.
template <EuclideanRing T>
ModulePacket<T> source_packet(std::span<const T> moduli, std::size_t m, std::size_t i, std::span<const T> payload);

/// sum_i coeffs[i] * packets[i], componentwise in each quotient.
template <EuclideanRing T>
ModulePacket<T> combine(std::span<const ModulePacket<T>> packets, std::span<const T> coeffs);

/// [[s, t], [u, v]] * [a, b]^T = [g, 0]^T with g = gcd(a, b) and s v - t u a unit.
template <EuclideanRing T>
struct EchelonStep {
  T s, t, u, v, g;
};

template <EuclideanRing T>
EchelonStep<T> row_echelon_2x1(const T& a, const T& b);

/// One elementary operation applied during recovery.
template <EuclideanRing T>
struct RowOp {
  enum Kind { mix, scale, add } kind;
  std::size_t i = 0, j = 0;  // mix acts on rows (i, j); scale on i; add: row i -= c * row j
  T s{}, t{}, u{}, v{};      // mix matrix, scale factor in s, add multiplier in s
  T modulus{};               // scale: the unit is invertible modulo this

  /// Determinant of the operation over T (the scale factor for scale ops).
  T determinant() const;
};

template <EuclideanRing T>
struct Recovery {
  bool ok = false;
  std::string reason;                   // set on failure
  std::vector<ModulePacket<T>> rows;    // reduced rows; the first m are the sources on success
  std::vector<RowOp<T>> ops;
};

/// Generalized Gauss-Jordan elimination on the headers. Failure is reported in the result.
template <EuclideanRing T>
Recovery<T> recover(std::span<const ModulePacket<T>> received, std::size_t m);

#define LNC_NETCODE_EXTERN(T)                                                                            \
  extern template struct ModulePacket<T>;                                                                 \
  extern template struct RowOp<T>;                                                                        \
  extern template ModulePacket<T> source_packet(std::span<const T>, std::size_t, std::size_t,            \
                                                std::span<const T>);                                      \
  extern template ModulePacket<T> combine(std::span<const ModulePacket<T>>, std::span<const T>);          \
  extern template EchelonStep<T> row_echelon_2x1(const T&, const T&);                                     \
  extern template Recovery<T> recover(std::span<const ModulePacket<T>>, std::size_t);
LNC_NETCODE_EXTERN(Integer)
LNC_NETCODE_EXTERN(GaussInt)
#undef LNC_NETCODE_EXTERN

}  // namespace lnc
