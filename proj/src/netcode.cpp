#include "lnc/netcode.hpp"

#include <stdexcept>

namespace lnc {

template <EuclideanRing T>
std::vector<T> ModulePacket<T>::moduli() const {
  std::vector<T> m;
  m.reserve(components.size());
  for (const auto& c : components) m.push_back(c.modulus());
  return m;
}

template <EuclideanRing T>
ModulePacket<T> source_packet(std::span<const T> moduli, std::size_t m, std::size_t i, std::span<const T> payload) {
  if (m > moduli.size()) throw std::invalid_argument("header longer than the packet");
  if (i >= m) throw std::invalid_argument("source index out of range");
  if (payload.size() != moduli.size() - m) throw std::invalid_argument("payload length mismatch");
  for (std::size_t c = 1; c < moduli.size(); ++c)
    if (!divides(moduli[c], moduli[c - 1])) throw std::invalid_argument("moduli must form a divisibility chain, largest first");
  ModulePacket<T> p;
  p.header_len = m;
  for (std::size_t c = 0; c < m; ++c) p.components.emplace_back(c == i ? T{1} : T{}, moduli[c]);
  for (std::size_t c = m; c < moduli.size(); ++c) p.components.emplace_back(payload[c - m], moduli[c]);
  return p;
}

template <EuclideanRing T>
ModulePacket<T> combine(std::span<const ModulePacket<T>> packets, std::span<const T> coeffs) {
  if (packets.empty() || packets.size() != coeffs.size()) throw std::invalid_argument("one coefficient per packet");
  ModulePacket<T> out;
  out.header_len = packets[0].header_len;
  const auto moduli = packets[0].moduli();
  for (const auto& p : packets)
    if (p.header_len != out.header_len || p.moduli() != moduli) throw std::invalid_argument("packet shape mismatch");
  for (std::size_t c = 0; c < moduli.size(); ++c) {
    Residue<T> acc(T{}, moduli[c]);
    for (std::size_t i = 0; i < packets.size(); ++i) acc += coeffs[i] * packets[i].components[c];
    out.components.push_back(acc);
  }
  return out;
}

template <EuclideanRing T>
EchelonStep<T> row_echelon_2x1(const T& a, const T& b) {
  if (is_zero(a) && is_zero(b)) throw std::invalid_argument("row_echelon_2x1 of (0, 0)");
  const auto [g, s, t] = ext_gcd(a, b);
  return {s, t, -div_exact(b, g), div_exact(a, g), g};
}

template <EuclideanRing T>
T RowOp<T>::determinant() const {
  switch (kind) {
    case mix: return s * v - t * u;
    case scale: return s;
    case add: return T{1};
  }
  return T{};
}

namespace {

template <EuclideanRing T>
void apply_mix(ModulePacket<T>& x, ModulePacket<T>& y, const T& s, const T& t, const T& u, const T& v) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    const auto a = x.components[c], b = y.components[c];
    x.components[c] = s * a + t * b;
    y.components[c] = u * a + v * b;
  }
}

}  // namespace

template <EuclideanRing T>
Recovery<T> recover(std::span<const ModulePacket<T>> received, std::size_t m) {
  Recovery<T> r;
  if (received.size() < m) {
    r.reason = "fewer received packets than sources";
    return r;
  }
  r.rows.assign(received.begin(), received.end());
  if (m == 0) {
    r.ok = true;
    return r;
  }
  const auto moduli = r.rows[0].moduli();
  for (const auto& p : r.rows)
    if (p.header_len != m || p.moduli() != moduli) throw std::invalid_argument("packet shape mismatch");

  // forward elimination: each column's pivot is built by cascading 2x1 echelon steps
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = j + 1; i < r.rows.size(); ++i) {
      const T a = r.rows[j].components[j].value(), b = r.rows[i].components[j].value();
      if (is_zero(b)) continue;
      const auto e = row_echelon_2x1(a, b);
      apply_mix(r.rows[j], r.rows[i], e.s, e.t, e.u, e.v);
      r.ops.push_back({RowOp<T>::mix, j, i, e.s, e.t, e.u, e.v, T{}});
    }
    const auto& pivot = r.rows[j].components[j];
    if (!pivot.is_unit() || pivot.is_zero()) {
      r.reason = "header pivot " + std::to_string(j) + " is not invertible modulo " + to_string(moduli[j]);
      return r;
    }
    if (pivot.value() != T{1}) {
      // later components have moduli dividing this one, so the unit stays a unit there
      const T inv = pivot.inverse().value();
      for (auto& c : r.rows[j].components) c = inv * c;
      r.ops.push_back({RowOp<T>::scale, j, j, inv, T{}, T{}, T{}, moduli[j]});
    }
  }
  // back substitution
  for (std::size_t j = m; j-- > 0;)
    for (std::size_t i = 0; i < j; ++i) {
      const T c = r.rows[i].components[j].value();
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < moduli.size(); ++k) r.rows[i].components[k] -= c * r.rows[j].components[k];
      r.ops.push_back({RowOp<T>::add, i, j, c, T{}, T{}, T{}, T{}});
    }
  r.ok = true;
  return r;
}

#define LNC_NETCODE_INSTANTIATE(T)                                                                   \
  template struct ModulePacket<T>;                                                                    \
  template struct RowOp<T>;                                                                           \
  template ModulePacket<T> source_packet(std::span<const T>, std::size_t, std::size_t, std::span<const T>); \
  template ModulePacket<T> combine(std::span<const ModulePacket<T>>, std::span<const T>);             \
  template EchelonStep<T> row_echelon_2x1(const T&, const T&);                                        \
  template Recovery<T> recover(std::span<const ModulePacket<T>>, std::size_t);
LNC_NETCODE_INSTANTIATE(Integer)
LNC_NETCODE_INSTANTIATE(GaussInt)

}  // namespace lnc
