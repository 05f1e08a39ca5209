#include "lnc/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lnc/field.hpp"

namespace lnc {

namespace {

constexpr std::size_t enumeration_limit = 5'000'000;
constexpr int max_radius_growth = 60;

cplx c_of(const GaussInt& x) { return to_complex(x); }

bool canonical_lead(const std::vector<GaussInt>& a) {
  for (const auto& x : a)
    if (!is_zero(x)) return canonical(x) == x;
  return false;
}

bool lex_less(const std::vector<GaussInt>& x, const std::vector<GaussInt>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].re != y[i].re) return x[i].re < y[i].re;
    if (x[i].im != y[i].im) return x[i].im < y[i].im;
  }
  return false;
}

bool satisfies(const std::vector<GaussInt>& a, const GaussInt& pi, CoefficientConstraint c) {
  if (c == CoefficientConstraint::all_entries_nonzero) {
    for (const auto& x : a)
      if (is_zero(Residue<GaussInt>::reduce(x, pi))) return false;
    return true;
  }
  for (const auto& x : a)
    if (!is_zero(Residue<GaussInt>::reduce(x, pi))) return true;
  return false;
}

struct Enumerator {
  const Eigen::MatrixXcd& l;
  double bound;
  std::size_t n;
  std::vector<GaussInt> a;
  std::vector<CoefficientVector> out;

  // level j fixes a_j given a_{j+1..n-1}; partial is the accumulated norm of levels > j
  void run(std::ptrdiff_t j, double partial) {
    if (j < 0) {
      bool nonzero = false;
      for (const auto& x : a) nonzero = nonzero || !is_zero(x);
      if (nonzero) out.push_back({a, partial});
      if (out.size() > enumeration_limit) throw std::length_error("sphere enumeration exceeds its limit");
      return;
    }
    const auto ju = static_cast<std::size_t>(j);
    const double ljj = l(ju, ju).real();
    cplx c{};
    for (std::size_t i = ju + 1; i < n; ++i) c += c_of(a[i]) * l(i, ju);
    c /= ljj;
    const double rem = bound - partial;
    if (rem < 0) return;
    const double r = std::sqrt(rem) / ljj;
    const auto re_lo = static_cast<i64>(std::ceil(-c.real() - r)), re_hi = static_cast<i64>(std::floor(-c.real() + r));
    for (i64 x = re_lo; x <= re_hi; ++x) {
      const double dx = static_cast<double>(x) + c.real();
      const double ry = std::sqrt(std::max(0.0, r * r - dx * dx));
      const auto im_lo = static_cast<i64>(std::ceil(-c.imag() - ry)), im_hi = static_cast<i64>(std::floor(-c.imag() + ry));
      for (i64 y = im_lo; y <= im_hi; ++y) {
        const double dy = static_cast<double>(y) + c.imag();
        const double level = ljj * ljj * (dx * dx + dy * dy);
        if (partial + level > bound) continue;
        a[ju] = GaussInt{x, y};
        run(j - 1, partial + level);
      }
    }
    a[ju] = GaussInt{};
  }
};

// row norms of an LLL-reduced basis of the lattice spanned by the rows of chol, ascending
std::vector<double> reduced_row_norms(const GramContext& ctx) {
  const auto r = lll_reduce(ctx.chol_factor);
  std::vector<double> norms(ctx.num_tx);
  for (std::size_t i = 0; i < ctx.num_tx; ++i) norms[i] = r.basis.row(static_cast<Eigen::Index>(i)).norm();
  std::sort(norms.begin(), norms.end());
  return norms;
}

}  // namespace

GramContext GramContext::from_channel(std::span<const cplx> h, double snr) {
  if (h.empty()) throw std::invalid_argument("empty channel vector");
  if (!(snr > 0)) throw std::invalid_argument("snr must be positive");
  const auto n = static_cast<Eigen::Index>(h.size());
  Eigen::RowVectorXcd hv(n);
  for (Eigen::Index i = 0; i < n; ++i) hv(i) = h[static_cast<std::size_t>(i)];
  const double hh = hv.squaredNorm();
  if (hh == 0) throw std::invalid_argument("channel vector must be nonzero");
  Eigen::MatrixXcd m = snr * Eigen::MatrixXcd::Identity(n, n) - (snr * snr / (snr * hh + 1.0)) * (hv.adjoint() * hv);
  auto ctx = from_matrix(m, snr);
  ctx.h.assign(h.begin(), h.end());
  return ctx;
}

GramContext GramContext::from_matrix(const Eigen::MatrixXcd& m, double snr) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("Gram matrix must be square");
  GramContext ctx;
  ctx.num_tx = static_cast<std::size_t>(m.rows());
  ctx.snr = snr;
  // symmetrize against rounding before factoring
  ctx.m_matrix = 0.5 * (m + m.adjoint());
  Eigen::LLT<Eigen::MatrixXcd> llt(ctx.m_matrix);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("Gram matrix is not positive definite");
  ctx.chol_factor = llt.matrixL();
  return ctx;
}

double GramContext::quadratic_form(std::span<const GaussInt> a) const {
  if (a.size() != num_tx) throw std::invalid_argument("coefficient length mismatch");
  Eigen::RowVectorXcd v(static_cast<Eigen::Index>(num_tx));
  for (std::size_t i = 0; i < num_tx; ++i) v(static_cast<Eigen::Index>(i)) = c_of(a[i]);
  return (v * chol_factor).squaredNorm();
}

double computation_rate(const GramContext& ctx, std::span<const GaussInt> a) {
  if (std::all_of(a.begin(), a.end(), [](const GaussInt& x) { return is_zero(x); }))
    throw std::invalid_argument("coefficient vector must be nonzero");
  return std::log2(ctx.snr / ctx.quadratic_form(a));
}

std::vector<CoefficientVector> enumerate_sphere(const GramContext& ctx, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
  const double r2 = radius * radius;
  Enumerator e{ctx.chol_factor, r2 * (1 + 1e-9) + 1e-12, ctx.num_tx, std::vector<GaussInt>(ctx.num_tx), {}};
  e.run(static_cast<std::ptrdiff_t>(ctx.num_tx) - 1, 0.0);
  // exact recomputation, then a tolerance-free ordering key
  for (auto& v : e.out) v.norm_sq = ctx.quadratic_form(v.a);
  const double unit = r2 * 1e-11;
  std::sort(e.out.begin(), e.out.end(), [unit](const CoefficientVector& x, const CoefficientVector& y) {
    const double kx = std::round(x.norm_sq / unit), ky = std::round(y.norm_sq / unit);
    if (kx != ky) return kx < ky;
    const bool cx = canonical_lead(x.a), cy = canonical_lead(y.a);
    if (cx != cy) return cx;
    return lex_less(x.a, y.a);
  });
  return e.out;
}

LllResult lll_reduce(const Eigen::MatrixXcd& input, double delta) {
  const auto n = input.rows();
  Eigen::MatrixXcd b = input;
  Matrix<GaussInt> t = Matrix<GaussInt>::identity(static_cast<std::size_t>(n));
  if (n == 0) return {b, t};

  Eigen::MatrixXcd bs(n, input.cols());
  Eigen::MatrixXcd mu = Eigen::MatrixXcd::Zero(n, n);
  Eigen::VectorXd bn(n);
  const double scale = input.squaredNorm();
  const auto recompute = [&] {
    for (Eigen::Index i = 0; i < n; ++i) {
      bs.row(i) = b.row(i);
      for (Eigen::Index j = 0; j < i; ++j) {
        mu(i, j) = (b.row(i) * bs.row(j).adjoint())(0, 0) / bn(j);
        bs.row(i) -= mu(i, j) * bs.row(j);
      }
      bn(i) = bs.row(i).squaredNorm();
      if (bn(i) <= 1e-24 * scale) throw std::invalid_argument("basis is rank deficient");
    }
  };
  recompute();

  Eigen::Index k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw std::runtime_error("LLL did not converge");
    for (Eigen::Index j = k - 1; j >= 0; --j) {
      const GaussInt r = round_to_ring(mu(k, j));
      if (is_zero(r)) continue;
      b.row(k) -= c_of(r) * b.row(j);
      for (std::size_t c = 0; c < t.cols(); ++c)
        t(static_cast<std::size_t>(k), c) -= r * t(static_cast<std::size_t>(j), c);
      for (Eigen::Index l = 0; l <= j; ++l) mu(k, l) -= c_of(r) * (l == j ? cplx{1, 0} : mu(j, l));
    }
    if (bn(k) >= (delta - std::norm(mu(k, k - 1))) * bn(k - 1)) {
      ++k;
    } else {
      b.row(k).swap(b.row(k - 1));
      t.swap_rows(static_cast<std::size_t>(k), static_cast<std::size_t>(k - 1));
      recompute();
      k = std::max<Eigen::Index>(k - 1, 1);
    }
  }
  return {b, t};
}

CoefficientVector best_single_coefficient(const GramContext& ctx, const GaussInt& pi, CoefficientConstraint constraint) {
  if (is_zero(pi) || is_unit(pi)) throw std::invalid_argument("constraint is infeasible for a zero or unit divisor");
  double radius = reduced_row_norms(ctx).front();
  for (int it = 0; it < max_radius_growth; ++it, radius *= 1.5) {
    for (auto& v : enumerate_sphere(ctx, radius))
      if (satisfies(v.a, pi, constraint)) return v;
  }
  throw std::invalid_argument("no coefficient vector meets the constraint");
}

std::vector<CoefficientVector> dominant_solution(const GramContext& ctx, std::size_t m, const GaussInt& pi) {
  if (m == 0 || m > ctx.num_tx) throw std::invalid_argument("need 1 <= m <= L");
  if (!is_prime(canonical(pi))) throw std::invalid_argument("independence is only defined for a prime divisor");
  double radius = reduced_row_norms(ctx)[m - 1];
  for (int it = 0; it < max_radius_growth; ++it, radius *= 1.5) {
    FieldEchelon<GaussInt> e(pi, ctx.num_tx, true);
    std::vector<CoefficientVector> picked;
    for (auto& v : enumerate_sphere(ctx, radius)) {
      if (!e.insert(v.a)) continue;
      picked.push_back(std::move(v));
      if (picked.size() == m) return picked;
    }
  }
  throw std::runtime_error("sphere enumeration found too few independent vectors");
}

}  // namespace lnc
