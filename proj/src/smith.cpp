#include "lnc/smith.hpp"

#include <algorithm>
#include <optional>

namespace lnc {

namespace {

// Row ops (r1, r2) -> (s r1 + t r2, u r1 + v r2) applied to the working matrix and its transform.
template <class T>
void mix_rows(Matrix<T>& d, Matrix<T>& p, std::size_t r1, std::size_t r2, const T& s, const T& t, const T& u,
              const T& v) {
  d.mix_rows(r1, r2, s, t, u, v);
  p.mix_rows(r1, r2, s, t, u, v);
}

template <class T>
void add_row(Matrix<T>& d, Matrix<T>& p, std::size_t dst, std::size_t src, const T& c) {
  d.add_row(dst, src, c);
  p.add_row(dst, src, c);
}

template <class T>
void scale_row(Matrix<T>& d, Matrix<T>& p, std::size_t i, const T& u) {
  if (u == T{1}) return;
  d.scale_row(i, u);
  p.scale_row(i, u);
}

template <class T>
void swap_rows(Matrix<T>& d, Matrix<T>& p, std::size_t a, std::size_t b) {
  d.swap_rows(a, b);
  p.swap_rows(a, b);
}

// Reduce every entry above a pivot modulo that pivot, pivots taken left to right.
template <class T>
void reduce_echelon(Matrix<T>& d, Matrix<T>& p, const std::vector<std::size_t>& piv) {
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) {
      const T& x = d(j, piv[k]);
      if (is_zero(x)) continue;
      add_row(d, p, j, k, -round_div(x, d(k, piv[k])));
    }
}

// Hermite form by inserting one row at a time into a reduced echelon basis.
// Keeping the basis reduced after every step bounds entry growth.
template <class T>
std::vector<std::size_t> row_hermite(Matrix<T>& d, Matrix<T>& p) {
  const std::size_t m = d.rows(), n = d.cols();
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t v = piv.size();
    swap_rows(d, p, v, i);
    for (std::size_t col = 0; col < n; ++col) {
      if (is_zero(d(v, col))) continue;
      const auto it = std::lower_bound(piv.begin(), piv.end(), col);
      const auto k = static_cast<std::size_t>(it - piv.begin());
      if (it == piv.end() || *it != col) {
        // new pivot: move row v into place k
        scale_row(d, p, v, canonical_unit(d(v, col)));
        for (std::size_t pos = v; pos > k; --pos) swap_rows(d, p, pos, pos - 1);
        piv.insert(it, col);
        reduce_echelon(d, p, piv);
        break;
      }
      const T x = d(k, col), y = d(v, col);
      const auto [g, s, t] = ext_gcd(x, y);
      mix_rows(d, p, k, v, s, t, -div_exact(y, g), div_exact(x, g));
      reduce_echelon(d, p, piv);
    }
  }
  return piv;
}

template <class T>
bool is_diagonal(const Matrix<T>& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !is_zero(d(i, j))) return false;
  return true;
}

}  // namespace

template <EuclideanRing T>
SnfResult<T> smith_normal_form(const Matrix<T>& a) {
  const std::size_t m = a.rows(), n = a.cols();
  Matrix<T> d = a;
  Matrix<T> p = Matrix<T>::identity(m);
  Matrix<T> q = Matrix<T>::identity(n);

  // alternate row and column Hermite forms until diagonal
  for (;;) {
    row_hermite(d, p);
    if (is_diagonal(d)) break;
    Matrix<T> dt = d.transpose(), qt = q.transpose();
    row_hermite(dt, qt);
    d = dt.transpose();
    q = qt.transpose();
    if (is_diagonal(d)) break;
  }

  const std::size_t r = std::min(m, n);
  auto swap_diag = [&](std::size_t i, std::size_t j) {
    swap_rows(d, p, i, j);
    d.swap_cols(i, j);
    q.swap_cols(i, j);
  };
  // zeros last
  std::size_t nz = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (!is_zero(d(i, i))) swap_diag(nz++, i);

  // smallest first, so already-chained diagonals need only permutations
  for (std::size_t i = 0; i < nz; ++i) {
    std::size_t best = i;
    for (std::size_t j = i + 1; j < nz; ++j)
      if (norm(d(j, j)) < norm(d(best, best))) best = j;
    if (best != i) swap_diag(i, best);
  }

  // divisibility chain: diag(x, y) -> diag(g, xy/g)
  for (std::size_t i = 0; i < nz; ++i)
    for (std::size_t j = i + 1; j < nz; ++j) {
      const T x = d(i, i), y = d(j, j);
      if (divides(x, y)) continue;
      const auto [g, s, t] = ext_gcd(x, y);
      add_row(d, p, i, j, T{1});
      const T u = -div_exact(y, g), v = div_exact(x, g);
      for (std::size_t k = 0; k < m; ++k) {
        const T c0 = d(k, i), c1 = d(k, j);
        d(k, i) = c0 * s + c1 * t;
        d(k, j) = c0 * u + c1 * v;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const T c0 = q(k, i), c1 = q(k, j);
        q(k, i) = c0 * s + c1 * t;
        q(k, j) = c0 * u + c1 * v;
      }
      add_row(d, p, j, i, -div_exact(d(j, i), g));
    }

  SnfResult<T> out{std::vector<T>(r), std::move(p), std::move(q)};
  for (std::size_t t = 0; t < r; ++t) {
    const T u = canonical_unit(d(t, t));
    if (u != T{1}) out.p.scale_row(t, u);
    out.d[t] = u * d(t, t);
  }
  return out;
}

template <EuclideanRing T>
HermiteResult<T> hermite_normal_form(const Matrix<T>& a) {
  HermiteResult<T> out{a, Matrix<T>::identity(a.rows()), {}};
  out.pivots = row_hermite(out.h, out.u);
  return out;
}

template <EuclideanRing T>
std::vector<T> invariant_factors_of_quotient(const Matrix<T>& j) {
  if (!j.square()) throw std::invalid_argument("transition matrix must be square");
  const auto snf = smith_normal_form(j);
  std::vector<T> out;
  for (const T& x : snf.d) {
    if (is_zero(x)) throw std::invalid_argument("singular transition matrix: quotient is infinite");
    if (!is_unit(x)) out.push_back(x);
  }
  return out;
}

template <EuclideanRing T>
Matrix<T> matrix_inverse_unimodular(const Matrix<T>& u) {
  if (!u.square()) throw std::invalid_argument("inverse of non-square matrix");
  const auto snf = smith_normal_form(u);
  // canonical associates of units are 1, so D = I and u^{-1} = Q * P
  for (const T& x : snf.d)
    if (x != T{1}) throw std::domain_error("matrix is not unimodular");
  return snf.q * snf.p;
}

template SnfResult<Integer> smith_normal_form(const Matrix<Integer>&);
template SnfResult<GaussInt> smith_normal_form(const Matrix<GaussInt>&);
template SnfResult<EisenInt> smith_normal_form(const Matrix<EisenInt>&);
template HermiteResult<Integer> hermite_normal_form(const Matrix<Integer>&);
template HermiteResult<GaussInt> hermite_normal_form(const Matrix<GaussInt>&);
template HermiteResult<EisenInt> hermite_normal_form(const Matrix<EisenInt>&);
template std::vector<Integer> invariant_factors_of_quotient(const Matrix<Integer>&);
template std::vector<GaussInt> invariant_factors_of_quotient(const Matrix<GaussInt>&);
template std::vector<EisenInt> invariant_factors_of_quotient(const Matrix<EisenInt>&);
template Matrix<Integer> matrix_inverse_unimodular(const Matrix<Integer>&);
template Matrix<GaussInt> matrix_inverse_unimodular(const Matrix<GaussInt>&);
template Matrix<EisenInt> matrix_inverse_unimodular(const Matrix<EisenInt>&);

}  // namespace lnc
