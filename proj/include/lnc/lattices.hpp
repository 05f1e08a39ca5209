#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lnc/smith.hpp"

namespace lnc {

template <class T>
using Vec = std::vector<T>;

/// Element of W = T/<pi_1> x ... x T/<pi_k>.
template <EuclideanRing T>
struct Message {
  std::vector<Residue<T>> components;

  static Message zero(std::span<const T> pis) {
    Message m;
    m.components.reserve(pis.size());
    for (const T& p : pis) m.components.emplace_back(T{}, p);
    return m;
  }
  std::size_t size() const { return components.size(); }
  bool is_zero() const {
    for (const auto& c : components)
      if (!c.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Message&, const Message&) = default;
  friend Message operator+(Message x, const Message& y) {
    if (x.size() != y.size()) throw std::invalid_argument("message shape mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) x.components[i] += y.components[i];
    return x;
  }
  friend Message operator-(Message x, const Message& y) {
    if (x.size() != y.size()) throw std::invalid_argument("message shape mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) x.components[i] -= y.components[i];
    return x;
  }
  friend Message operator*(const T& c, Message x) {
    for (auto& r : x.components) r = c * r;
    return x;
  }
};

/// Nested pair with G_fine' = J * G_fine. Rows of g_fine generate the fine lattice inside T^n.
template <EuclideanRing T>
struct LatticeQuotient {
  Matrix<T> g_fine;
  Matrix<T> j;
  double scale = 1.0;                      // geometric scale applied to ambient coordinates
  std::optional<Matrix<cplx>> unitary;     // rotation, identity when absent

  std::size_t dim() const { return g_fine.rows(); }
  Matrix<T> g_coarse() const { return j * g_fine; }
};

/// Solves c * G = lambda exactly through a Hermite form U * G = H.
template <EuclideanRing T>
class ExactSolver {
 public:
  ExactSolver() = default;
  explicit ExactSolver(const Matrix<T>& g);

  std::size_t dim() const { return diag_.size(); }

  /// Coordinates c with c * G = lambda, or nullopt when lambda is outside the lattice.
  std::optional<Vec<T>> solve(std::span<const T> lambda) const;
  bool contains(std::span<const T> lambda) const { return solve(lambda).has_value(); }

  /// Triangular coordinates y with y * H = lambda, computed only for indices in plan order.
  /// Throws std::domain_error on an inexact division.
  void forward(std::span<const T> lambda, std::span<const std::size_t> plan, std::span<T> y) const;

  /// Closure of the given indices under the forward-substitution dependencies, ascending.
  std::vector<std::size_t> plan_for(std::vector<std::size_t> needed) const;

  const Matrix<T>& u() const { return u_; }
  bool u_is_identity() const { return u_identity_; }
  std::span<const T> diagonal() const { return diag_; }

 private:
  Matrix<T> u_;
  bool u_identity_ = true;
  std::vector<T> diag_;
  std::vector<std::vector<std::pair<std::size_t, T>>> above_;  // column j: (i, H_ij) for i < j
};

/// Linear labeling phi: fine lattice -> W with kernel the coarse lattice, and its section embed.
template <EuclideanRing T>
class LinearLabeling {
 public:
  LinearLabeling() = default;

  std::size_t n() const { return n_; }
  std::size_t k() const { return pis_.size(); }
  /// Invariant factors in chain order pi_1 | pi_2 | ...
  const std::vector<T>& pis() const { return pis_; }
  /// Same factors, largest first.
  std::vector<T> pis_reversed() const { return {pis_.rbegin(), pis_.rend()}; }
  /// Transformed fine generator G = Q^{-1} * G_fine; rows k_units.. carry the message.
  const Matrix<T>& g_normal() const { return g_normal_; }

  /// |W|; throws std::overflow_error if it does not fit.
  i128 size() const;
  double log2_size() const;
  /// Message rate (1/n) * log2 |W|.
  double r_mes() const { return n_ ? log2_size() / static_cast<double>(n_) : 0.0; }

  /// phi(lambda) for lambda in the fine lattice (ambient coordinates).
  Message<T> label(std::span<const T> lambda) const;
  /// phi(r * G_normal).
  Message<T> label_coords(std::span<const T> r) const;
  /// (r_1, ..., r_k, 0, ..., 0) * G_normal with r_i the minimal-norm lifts.
  Vec<T> embed(const Message<T>& w) const;
  /// (r_1, ..., r_k, 0, ..., 0) * G_normal for caller-chosen representatives r.
  Vec<T> embed_coords(std::span<const T> r) const;

  bool in_fine(std::span<const T> lambda) const { return fine_.contains(lambda); }
  bool in_coarse(std::span<const T> lambda) const { return coarse_.contains(lambda); }

  Message<T> zero() const { return Message<T>::zero(pis_); }

  template <EuclideanRing U>
  friend LinearLabeling<U> build_labeling(const LatticeQuotient<U>& q);

 private:
  std::size_t n_ = 0;
  std::size_t units_ = 0;
  std::vector<T> pis_;
  Matrix<T> g_normal_;
  Matrix<T> q_;  // column transform of J
  ExactSolver<T> fine_;
  ExactSolver<T> coarse_;
  std::vector<std::size_t> plan_;
  // message column t: sparse (l, M_lt) with M = U * Q restricted to the message columns
  std::vector<std::vector<std::pair<std::size_t, T>>> extract_;
  // sparse message rows of g_normal
  std::vector<std::vector<std::pair<std::size_t, T>>> embed_rows_;
};

template <EuclideanRing T>
LinearLabeling<T> build_labeling(const LatticeQuotient<T>& q);

/// Coarse lattice c * T^n detected from the Hermite form of J * G_fine.
template <EuclideanRing T>
std::optional<T> coarse_scale(const LatticeQuotient<T>& q);

/// x - c * round(x / c) per coordinate; lands in the half-open region (-|c|/2, |c|/2].
std::vector<cplx> mod_scaled_integer_lattice(std::span<const cplx> x, GaussInt c);

/// x mod coarse lattice for quotients whose coarse lattice is c * Z[i]^n.
std::vector<cplx> mod_coarse(const LatticeQuotient<GaussInt>& q, std::span<const cplx> x);

struct DistanceResult {
  i128 d_sq = 0;
  std::uint64_t kissing = 0;
};

/// Minimum squared norm over fine \ coarse points with ambient coordinates in the box
/// |re|, |im| <= radius_bound, and the number of points attaining it.
template <EuclideanRing T>
DistanceResult min_intercoset_distance_bruteforce(const LatticeQuotient<T>& q, const LinearLabeling<T>& l,
                                                  i64 radius_bound, std::uint64_t budget = 20'000'000);

/// log2 of the fine-lattice volume in the complex convention (|det|^2 for Z[i]).
template <EuclideanRing T>
double log2_fine_volume(const LatticeQuotient<T>& q);

/// d^2 / V^{1/n}.
double nominal_coding_gain(double d_sq, double fine_volume, std::size_t n);
double nominal_coding_gain_log(double d_sq, double log2_fine_volume, std::size_t n);

/// Squared Euclidean norm of an exact vector in ambient coordinates.
template <EuclideanRing T>
i128 squared_norm(std::span<const T> v) {
  i128 s = 0;
  for (const T& x : v) s += norm(x);
  return s;
}

std::vector<cplx> to_complex(std::span<const GaussInt> v);

#define LNC_LATTICES_EXTERN(T)                                                                             \
  extern template class ExactSolver<T>;                                                                     \
  extern template class LinearLabeling<T>;                                                                  \
  extern template LinearLabeling<T> build_labeling(const LatticeQuotient<T>&);                              \
  extern template std::optional<T> coarse_scale(const LatticeQuotient<T>&);                                 \
  extern template DistanceResult min_intercoset_distance_bruteforce(const LatticeQuotient<T>&,              \
                                                                    const LinearLabeling<T>&, i64,         \
                                                                    std::uint64_t);                         \
  extern template double log2_fine_volume(const LatticeQuotient<T>&);
LNC_LATTICES_EXTERN(Integer)
LNC_LATTICES_EXTERN(GaussInt)
LNC_LATTICES_EXTERN(EisenInt)
#undef LNC_LATTICES_EXTERN

}  // namespace lnc
