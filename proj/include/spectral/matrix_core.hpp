#pragma once

#include "spectral/types.hpp"

namespace spectral {

/// Eigenvalues of a dense complex matrix, canonically ordered, repeated with
/// algebraic multiplicity. Throws ConvergenceError if the underlying Schur
/// iteration fails.
Spectrum eigenvalues(const CMatrix& m, double tol = kResidualTol);

/// Largest singular value.
double operator_norm(const CMatrix& m);

/// Matrix exponential by scaling-and-squaring with a truncated Taylor kernel;
/// the scaled norm is kept at or below 0.5.
CMatrix matrix_exp(const CMatrix& m);

struct MinPolyResult {
  int degree = 1;
  double residual = 0.0;  // relative residual at the accepted degree
  bool uncertain = false; // residual landed within a decade of tol
};

/// Degree of the minimal polynomial: the smallest d with M^d in
/// span{I, M, ..., M^(d-1)}, decided by a column-pivoted least-squares
/// membership test at relative tolerance `tol`.
MinPolyResult min_poly_degree(const CMatrix& m, double tol = kResidualTol);

/// Jordan structure from rank staircases of (M - lambda I)^k. Requires the
/// eigenvalue clusters to be separated by more than 10*tol.
JordanProfile jordan_profile(const CMatrix& m, double tol = kTransportTol);

// Small shared helpers.

/// Numerical rank by singular values > tol * sigma_max.
int numerical_rank(const CMatrix& m, double tol);

/// Frobenius-normalized distance used by residual checks: |a-b|/max(1,|b|).
double relative_error(const CMatrix& a, const CMatrix& b);

}  // namespace spectral
