#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "lnc/matrix.hpp"

namespace lnc {

/// Incremental row echelon basis over the finite field T/<pi>.
/// Entries are kept as minimal-norm representatives and every pivot equals 1.
/// With back_substitute the basis stays fully reduced; without it earlier rows are never
/// touched, so a prefix of the basis always spans the prefix of inserted vectors.
template <EuclideanRing T>
class FieldEchelon {
 public:
  FieldEchelon(const T& pi, std::size_t n, bool back_substitute = true) : pi_(canonical(pi)), n_(n), back_(back_substitute) {
    if (!is_prime(pi_)) throw std::invalid_argument("field modulus must be prime");
  }

  std::size_t dim() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const T& modulus() const { return pi_; }
  const std::vector<std::vector<T>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  T reduce_scalar(const T& x) const { return Residue<T>::reduce(x, pi_); }

  std::vector<T> reduce(std::span<const T> v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> w(v.begin(), v.end());
    for (auto& x : w) x = reduce_scalar(x);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T c = w[pivots_[r]];
      if (is_zero(c)) continue;
      for (std::size_t j = pivots_[r]; j < n_; ++j)
        if (!is_zero(rows_[r][j])) w[j] = reduce_scalar(w[j] - c * rows_[r][j]);
    }
    return w;
  }

  bool in_span(std::span<const T> v) const {
    for (const T& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }

  /// Adds v when it is independent of the basis; returns whether the rank grew.
  bool insert(std::span<const T> v) {
    auto w = reduce(v);
    std::size_t lead = n_;
    for (std::size_t j = 0; j < n_; ++j)
      if (!is_zero(w[j])) {
        lead = j;
        break;
      }
    if (lead == n_) return false;
    const T inv = Residue<T>(w[lead], pi_).inverse().value();
    for (std::size_t j = lead; j < n_; ++j) w[j] = reduce_scalar(w[j] * inv);
    if (back_) {
      for (auto& row : rows_) {
        const T c = row[lead];
        if (is_zero(c)) continue;
        for (std::size_t j = lead; j < n_; ++j)
          if (!is_zero(w[j])) row[j] = reduce_scalar(row[j] - c * w[j]);
      }
    }
    // keep rows ordered by pivot so reduce() can sweep once
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    order_.insert(order_.begin() + static_cast<std::ptrdiff_t>(pos), inserted_++);
    return true;
  }

  /// Rows in insertion order.
  Matrix<T> in_insertion_order() const {
    Matrix<T> m(rows_.size(), n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t j = 0; j < n_; ++j) m(order_[r], j) = rows_[r][j];
    return m;
  }
  /// Pivot column of each row in insertion order.
  std::vector<std::size_t> pivots_in_insertion_order() const {
    std::vector<std::size_t> p(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) p[order_[r]] = pivots_[r];
    return p;
  }
  /// Rows sorted by pivot column.
  Matrix<T> in_pivot_order() const {
    Matrix<T> m(rows_.size(), n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t j = 0; j < n_; ++j) m(r, j) = rows_[r][j];
    return m;
  }

 private:
  T pi_;
  std::size_t n_;
  bool back_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> order_;
  std::size_t inserted_ = 0;
};

}  // namespace lnc
