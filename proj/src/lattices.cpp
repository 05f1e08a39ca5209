#include "lnc/lattices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lnc {

// ---- ExactSolver ----

template <EuclideanRing T>
ExactSolver<T>::ExactSolver(const Matrix<T>& g) {
  if (!g.square()) throw std::invalid_argument("generator matrix must be square");
  const std::size_t n = g.rows();
  auto hf = hermite_normal_form(g);
  if (hf.pivots.size() != n) throw std::invalid_argument("generator matrix is singular");
  u_ = std::move(hf.u);
  u_identity_ = (u_ == Matrix<T>::identity(n));
  diag_.resize(n);
  above_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    diag_[j] = hf.h(j, j);
    for (std::size_t i = 0; i < j; ++i)
      if (!is_zero(hf.h(i, j))) above_[j].emplace_back(i, hf.h(i, j));
  }
}

template <EuclideanRing T>
std::optional<Vec<T>> ExactSolver<T>::solve(std::span<const T> lambda) const {
  const std::size_t n = dim();
  if (lambda.size() != n) throw std::invalid_argument("vector length mismatch");
  Vec<T> y(n);
  for (std::size_t j = 0; j < n; ++j) {
    T acc = lambda[j];
    for (const auto& [i, h] : above_[j]) acc -= y[i] * h;
    const T q = round_div(acc, diag_[j]);
    if (q * diag_[j] != acc) return std::nullopt;
    y[j] = q;
  }
  if (u_identity_) return y;
  return vec_mul<T>(y, u_);
}

template <EuclideanRing T>
void ExactSolver<T>::forward(std::span<const T> lambda, std::span<const std::size_t> plan,
                             std::span<T> y) const {
  if (lambda.size() != dim() || y.size() != dim()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t j : plan) {
    T acc = lambda[j];
    for (const auto& [i, h] : above_[j]) acc -= y[i] * h;
    y[j] = div_exact(acc, diag_[j]);
  }
}

template <EuclideanRing T>
std::vector<std::size_t> ExactSolver<T>::plan_for(std::vector<std::size_t> needed) const {
  std::vector<char> in(dim(), 0);
  for (std::size_t i : needed) in.at(i) = 1;
  for (std::size_t j = dim(); j-- > 0;)
    if (in[j])
      for (const auto& [i, h] : above_[j]) in[i] = 1;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < dim(); ++j)
    if (in[j]) out.push_back(j);
  return out;
}

// ---- LinearLabeling ----

template <EuclideanRing T>
i128 LinearLabeling<T>::size() const {
  i128 s = 1;
  for (const T& p : pis_) {
    const i128 f = quotient_size(p);
    if (s > std::numeric_limits<i128>::max() / f) throw std::overflow_error("message space too large");
    s *= f;
  }
  return s;
}

template <EuclideanRing T>
double LinearLabeling<T>::log2_size() const {
  double s = 0;
  for (const T& p : pis_) s += std::log2(static_cast<double>(quotient_size(p)));
  return s;
}

template <EuclideanRing T>
Message<T> LinearLabeling<T>::label(std::span<const T> lambda) const {
  Vec<T> y(n_);
  fine_.forward(lambda, plan_, y);
  Message<T> out;
  out.components.reserve(k());
  for (std::size_t t = 0; t < k(); ++t) {
    T acc{};
    for (const auto& [l, m] : extract_[t]) acc += y[l] * m;
    out.components.emplace_back(acc, pis_[t]);
  }
  return out;
}

template <EuclideanRing T>
Message<T> LinearLabeling<T>::label_coords(std::span<const T> r) const {
  if (r.size() != n_) throw std::invalid_argument("coordinate length mismatch");
  Message<T> out;
  for (std::size_t t = 0; t < k(); ++t) out.components.emplace_back(r[units_ + t], pis_[t]);
  return out;
}

template <EuclideanRing T>
Vec<T> LinearLabeling<T>::embed_coords(std::span<const T> r) const {
  if (r.size() != k()) throw std::invalid_argument("message length mismatch");
  Vec<T> out(n_);
  for (std::size_t t = 0; t < k(); ++t) {
    if (is_zero(r[t])) continue;
    for (const auto& [j, g] : embed_rows_[t]) out[j] += r[t] * g;
  }
  return out;
}

template <EuclideanRing T>
Vec<T> LinearLabeling<T>::embed(const Message<T>& w) const {
  if (w.size() != k()) throw std::invalid_argument("message length mismatch");
  Vec<T> r(k());
  for (std::size_t t = 0; t < k(); ++t) {
    if (w.components[t].modulus() != pis_[t]) throw std::invalid_argument("message modulus mismatch");
    r[t] = lift_sigma(w.components[t]);
  }
  return embed_coords(r);
}

template <EuclideanRing T>
LinearLabeling<T> build_labeling(const LatticeQuotient<T>& q) {
  const std::size_t n = q.dim();
  if (!q.g_fine.square() || !q.j.square() || q.j.rows() != n)
    throw std::invalid_argument("quotient matrices must be square of equal size");
  auto snf = smith_normal_form(q.j);

  LinearLabeling<T> l;
  l.n_ = n;
  for (const T& d : snf.d) {
    if (is_zero(d)) throw std::invalid_argument("singular transition matrix: quotient is infinite");
    if (is_unit(d)) ++l.units_;
    else l.pis_.push_back(d);
  }
  l.q_ = std::move(snf.q);
  l.g_normal_ = matrix_inverse_unimodular(l.q_) * q.g_fine;
  l.fine_ = ExactSolver<T>(q.g_fine);
  l.coarse_ = ExactSolver<T>(q.g_coarse());

  // r = c * Q = y * (U * Q); keep only the message columns
  const Matrix<T> m = l.fine_.u_is_identity() ? l.q_ : l.fine_.u() * l.q_;
  l.extract_.resize(l.k());
  std::vector<std::size_t> needed;
  for (std::size_t t = 0; t < l.k(); ++t)
    for (std::size_t row = 0; row < n; ++row)
      if (!is_zero(m(row, l.units_ + t))) {
        l.extract_[t].emplace_back(row, m(row, l.units_ + t));
        needed.push_back(row);
      }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());
  l.plan_ = l.fine_.plan_for(needed);

  l.embed_rows_.resize(l.k());
  for (std::size_t t = 0; t < l.k(); ++t)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_zero(l.g_normal_(l.units_ + t, j))) l.embed_rows_[t].emplace_back(j, l.g_normal_(l.units_ + t, j));
  return l;
}

template <EuclideanRing T>
std::optional<T> coarse_scale(const LatticeQuotient<T>& q) {
  const auto hf = hermite_normal_form(q.g_coarse());
  const std::size_t n = q.dim();
  if (hf.pivots.size() != n) return std::nullopt;
  const T c = hf.h(0, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (hf.h(i, j) != (i == j ? c : T{})) return std::nullopt;
  return c;
}

std::vector<cplx> mod_scaled_integer_lattice(std::span<const cplx> x, GaussInt c) {
  if (is_zero(c)) throw std::invalid_argument("zero coarse scale");
  const cplx cc = to_complex(c);
  std::vector<cplx> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - cc * to_complex(round_to_ring(x[i] / cc));
  return out;
}

std::vector<cplx> mod_coarse(const LatticeQuotient<GaussInt>& q, std::span<const cplx> x) {
  if (q.unitary) throw std::invalid_argument("rotated coarse lattices are not supported");
  const auto c = coarse_scale(q);
  if (!c) throw std::invalid_argument("coarse lattice is not a scaled copy of Z[i]^n");
  if (x.size() != q.dim()) throw std::invalid_argument("vector length mismatch");
  const double s = q.scale;
  std::vector<cplx> scaled(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] / s;
  auto out = mod_scaled_integer_lattice(scaled, *c);
  for (auto& v : out) v *= s;
  return out;
}

template <EuclideanRing T>
DistanceResult min_intercoset_distance_bruteforce(const LatticeQuotient<T>& q, const LinearLabeling<T>& l,
                                                  i64 radius_bound, std::uint64_t budget) {
  const std::size_t n = q.dim();
  if (radius_bound < 1) throw std::invalid_argument("radius bound must be positive");
  if (l.k() == 0) throw std::invalid_argument("quotient is trivial: no fine point outside the coarse lattice");
  constexpr bool two_d = !std::is_same_v<T, Integer>;
  const std::size_t axes = two_d ? 2 * n : n;
  const auto side = static_cast<std::uint64_t>(2 * radius_bound + 1);
  double total = 1;
  for (std::size_t a = 0; a < axes; ++a) total *= static_cast<double>(side);
  if (total > static_cast<double>(budget)) throw std::length_error("enumeration box exceeds budget");

  std::vector<i64> digits(axes, -radius_bound);
  Vec<T> v(n);
  DistanceResult best{-1, 0};
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) {
      if constexpr (two_d) v[i] = T{digits[2 * i], digits[2 * i + 1]};
      else v[i] = T{digits[i]};
    }
    const i128 nrm = squared_norm<T>(v);
    if (nrm > 0 && (best.d_sq < 0 || nrm <= best.d_sq) && l.in_fine(v) && !l.label(v).is_zero()) {
      if (best.d_sq < 0 || nrm < best.d_sq) best = {nrm, 0};
      ++best.kissing;
    }
    std::size_t a = 0;
    while (a < axes && digits[a] == radius_bound) digits[a++] = -radius_bound;
    if (a == axes) break;
    ++digits[a];
  }
  if (best.d_sq < 0) throw std::runtime_error("no fine point outside the coarse lattice inside the box");
  return best;
}

template <EuclideanRing T>
double log2_fine_volume(const LatticeQuotient<T>& q) {
  const ExactSolver<T> s(q.g_fine);
  double v = 0;
  for (const T& d : s.diagonal()) {
    if constexpr (std::is_same_v<T, Integer>) v += std::log2(std::abs(static_cast<double>(d.v)));
    else v += std::log2(static_cast<double>(norm(d)));
  }
  if constexpr (std::is_same_v<T, EisenInt>) v += static_cast<double>(q.dim()) * std::log2(std::sqrt(3.0) / 2.0);
  return v + 2.0 * static_cast<double>(q.dim()) * std::log2(q.scale);
}

double nominal_coding_gain(double d_sq, double fine_volume, std::size_t n) {
  if (d_sq <= 0 || fine_volume <= 0 || n == 0) throw std::invalid_argument("coding gain inputs must be positive");
  return d_sq / std::pow(fine_volume, 1.0 / static_cast<double>(n));
}

double nominal_coding_gain_log(double d_sq, double log2_volume, std::size_t n) {
  if (d_sq <= 0 || n == 0) throw std::invalid_argument("coding gain inputs must be positive");
  return d_sq / std::exp2(log2_volume / static_cast<double>(n));
}

std::vector<cplx> to_complex(std::span<const GaussInt> v) {
  std::vector<cplx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_complex(v[i]);
  return out;
}

#define LNC_LATTICES_INSTANTIATE(T)                                                                  \
  template class ExactSolver<T>;                                                                     \
  template class LinearLabeling<T>;                                                                  \
  template LinearLabeling<T> build_labeling(const LatticeQuotient<T>&);                              \
  template std::optional<T> coarse_scale(const LatticeQuotient<T>&);                                 \
  template DistanceResult min_intercoset_distance_bruteforce(const LatticeQuotient<T>&,              \
                                                             const LinearLabeling<T>&, i64,          \
                                                             std::uint64_t);                         \
  template double log2_fine_volume(const LatticeQuotient<T>&);
LNC_LATTICES_INSTANTIATE(Integer)
LNC_LATTICES_INSTANTIATE(GaussInt)
LNC_LATTICES_INSTANTIATE(EisenInt)

}  // namespace lnc
