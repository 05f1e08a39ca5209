#pragma once

#include <vector>

#include "lnc/matrix.hpp"

namespace lnc {

/// P * A * Q = diag(d), with d_1 | d_2 | ... and canonical nonzero entries.
template <class T>
struct SnfResult {
  std::vector<T> d;
  Matrix<T> p;
  Matrix<T> q;
};

template <EuclideanRing T>
SnfResult<T> smith_normal_form(const Matrix<T>& a);

/// U * A = H with H in reduced row echelon (Hermite) form; nonzero rows first.
template <class T>
struct HermiteResult {
  Matrix<T> h;
  Matrix<T> u;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <EuclideanRing T>
HermiteResult<T> hermite_normal_form(const Matrix<T>& a);

/// Non-unit invariant factors of a nonsingular square matrix, in chain order.
template <EuclideanRing T>
std::vector<T> invariant_factors_of_quotient(const Matrix<T>& j);

template <EuclideanRing T>
Matrix<T> matrix_inverse_unimodular(const Matrix<T>& u);

template <EuclideanRing T>
bool is_unimodular(const Matrix<T>& u) {
  return u.square() && is_unit(determinant(u));
}

extern template SnfResult<Integer> smith_normal_form(const Matrix<Integer>&);
extern template SnfResult<GaussInt> smith_normal_form(const Matrix<GaussInt>&);
extern template SnfResult<EisenInt> smith_normal_form(const Matrix<EisenInt>&);
extern template HermiteResult<Integer> hermite_normal_form(const Matrix<Integer>&);
extern template HermiteResult<GaussInt> hermite_normal_form(const Matrix<GaussInt>&);
extern template HermiteResult<EisenInt> hermite_normal_form(const Matrix<EisenInt>&);
extern template std::vector<Integer> invariant_factors_of_quotient(const Matrix<Integer>&);
extern template std::vector<GaussInt> invariant_factors_of_quotient(const Matrix<GaussInt>&);
extern template std::vector<EisenInt> invariant_factors_of_quotient(const Matrix<EisenInt>&);
extern template Matrix<Integer> matrix_inverse_unimodular(const Matrix<Integer>&);
extern template Matrix<GaussInt> matrix_inverse_unimodular(const Matrix<GaussInt>&);
extern template Matrix<EisenInt> matrix_inverse_unimodular(const Matrix<EisenInt>&);

}  // namespace lnc
