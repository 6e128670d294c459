#pragma once

#include "spectral/matrix_core.hpp"
#include "spectral/types.hpp"

namespace spectral {

/// The coefficient map c: W -> signed characteristic coefficients, computed
/// by Faddeev-LeVerrier (no eigenvalues involved). P_{c(W)}(t) = det(tI - W).
CoeffPoint char_coeffs(const CMatrix& w);

/// Symmetrization pi_n: roots -> signed coefficient tuple with
/// P_{pi_n(roots)}(t) = prod (t - root_j).
CoeffPoint sym_poly(const CVector& roots);

/// Horner evaluation of P_x(t) = t^n + sum (-1)^j x_j t^(n-j).
Complex eval_P(const CoeffPoint& x, Complex t);

/// Companion right inverse kappa: char_coeffs(companion(x)) == x.
/// Subdiagonal ones; the last column carries the signed coefficients.
CMatrix companion(const CoeffPoint& x);

/// Plain monic coefficients (a_1..a_n) with P_x(t) = t^n + sum a_j t^(n-j),
/// i.e. a_j = (-1)^j x_j, and the inverse conversion.
CVector plain_coeffs(const CoeffPoint& x);
CoeffPoint from_plain_coeffs(const CVector& a);

/// Roots of P_x as a canonical Spectrum (companion matrix eigenvalues).
Spectrum coeff_roots(const CoeffPoint& x, double tol = kResidualTol);

struct JacobianReport {
  CMatrix base;             // the point A
  CMatrix matrix;           // n x n^2; column (i + n*j) is d c / d A_ij
  RVector singular_values;  // nonincreasing
  int rank = 0;
  double tol = 0.0;
};

/// Exact derivative of c at A via Newton's identities on power-sum traces:
/// d p_j(A)[H] = j trace(A^(j-1) H), then k e_k = sum (-1)^(i-1) e_(k-i) p_i.
JacobianReport jacobian_c(const CMatrix& a, double tol = 1e-7);

struct RankTheoremReport {
  int jacobian_rank = 0;
  int minpoly_degree = 0;
  bool minpoly_uncertain = false;
  bool holds = false;
};

/// rank(c'(A)) == degree of the minimal polynomial of A.
RankTheoremReport verify_rank_theorem(const CMatrix& a, double tol = 1e-7);

struct KernelProbeReport {
  bool annihilated = false;   // || c'(A) E_jk || <= tol * scale
  bool cross_block = false;   // (j,k) avoids every diagonal Jordan-block square
  double image_norm = 0.0;
};

/// For a nilpotent A in Jordan form (direct sum of nilpotent Jordan blocks),
/// reports whether c'(A) annihilates the elementary matrix E_jk (1-based
/// indices). Cross-block positions are always annihilated.
KernelProbeReport nilpotent_kernel_probe(const CMatrix& a, int j, int k,
                                         double tol = kResidualTol);

}  // namespace spectral
