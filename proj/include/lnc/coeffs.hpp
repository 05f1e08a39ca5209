#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lnc/matrix.hpp"

namespace lnc {

/// Channel context of one relay: M = SNR I - SNR^2 / (SNR ||h||^2 + 1) h^H h and its Cholesky
/// factor, so that a M a^H = ||a * chol||^2 for row vectors a.
struct GramContext {
  std::size_t num_tx = 0;
  std::vector<cplx> h;
  double snr = 0;
  Eigen::MatrixXcd m_matrix;
  Eigen::MatrixXcd chol_factor;  // lower triangular, positive real diagonal

  static GramContext from_channel(std::span<const cplx> h, double snr);
  /// Arbitrary Hermitian positive-definite Gram matrix; h is left empty.
  static GramContext from_matrix(const Eigen::MatrixXcd& m, double snr);

  /// a M a^H.
  double quadratic_form(std::span<const GaussInt> a) const;
};

/// log2(SNR / a M a^H); may be negative.
double computation_rate(const GramContext& ctx, std::span<const GaussInt> a);

enum class CoefficientConstraint {
  nonzero_mod_pi,      // sigma(a) != 0
  all_entries_nonzero  // sigma(a_l) != 0 for every l
};

struct CoefficientVector {
  std::vector<GaussInt> a;
  double norm_sq = 0;  // a M a^H
};

/// All nonzero a with a M a^H <= radius^2 (up to a relative tolerance), sorted by norm and then
/// lexicographically by (re, im) of the entries.
std::vector<CoefficientVector> enumerate_sphere(const GramContext& ctx, double radius);

struct LllResult {
  Eigen::MatrixXcd basis;        // reduced rows
  Matrix<GaussInt> transform;    // basis = transform * input, unimodular over Z[i]
};

/// Complex LLL on the rows of b, delta = 0.75.
LllResult lll_reduce(const Eigen::MatrixXcd& b, double delta = 0.75);

/// Shortest nonzero a (in the M-norm) meeting the constraint.
CoefficientVector best_single_coefficient(const GramContext& ctx, const GaussInt& pi, CoefficientConstraint constraint);

/// Greedy dominant solution: m vectors with linearly independent projections over Z[i]/<pi>,
/// each the shortest enumerated vector independent of the earlier ones.
std::vector<CoefficientVector> dominant_solution(const GramContext& ctx, std::size_t m, const GaussInt& pi);

}  // namespace lnc
