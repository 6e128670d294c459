#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "spectral/charpoly_map.hpp"
#include "spectral/domain.hpp"
#include "spectral/matrix_core.hpp"

namespace spectral {

class SelfMap;

/// h(w) = sum coeffs[k] w^k, applied to matrices by Horner.
struct PolynomialMap {
  CVector coeffs;
};

/// Truncated power series with convergence radius and a bound M so that
/// |a_k| <= M / radius^k for the (untabulated) tail; the matrix sum is
/// truncated once the rigorous tail estimate drops below 1e-12.
struct PowerSeriesMap {
  CVector coeffs;
  double radius = 1.0;
  double coeff_bound = 1.0;
};

/// h(w) = num(w) / den(w); den must be nonsingular on the spectrum.
struct RationalMap {
  CVector num;
  CVector den;
};

/// C_S(W) = S^-1 W S.
struct Conjugation {
  CMatrix s;
};

/// L_lambda(W) = W - lambda I.
struct Translation {
  Complex lambda;
};

/// W -> exp(W - I).
struct ExpShift {};

/// Second-order probe around a base point: W -> W + (W - base)^2 * factor.
/// Fixes `base` with derivative I there; not spectrum-determined.
struct QuadPerturb {
  CMatrix base;
  CMatrix factor;
};

/// Maps applied right-to-left (the last entry acts first).
struct Composition {
  std::vector<SelfMap> maps;
};

using SelfMapVariant = std::variant<PolynomialMap, PowerSeriesMap, RationalMap,
                                    Conjugation, Translation, ExpShift,
                                    QuadPerturb, Composition>;

/// Composable holomorphic self-map of S_n(Omega). Immutable; `apply` checks
/// codomain membership per call.
class SelfMap {
 public:
  SelfMap(SelfMapVariant variant, DomainSpec domain)
      : variant_(std::move(variant)), domain_(std::move(domain)) {}

  static SelfMap identity(DomainSpec domain);
  static SelfMap polynomial(CVector coeffs, DomainSpec domain);
  static SelfMap power_series(CVector coeffs, double radius, double coeff_bound,
                              DomainSpec domain);
  static SelfMap rational(CVector num, CVector den, DomainSpec domain);
  static SelfMap conjugation(CMatrix s, DomainSpec domain);
  static SelfMap translation(Complex lambda, DomainSpec domain);
  static SelfMap exp_shift(DomainSpec domain);
  static SelfMap quad_perturb(CMatrix base, CMatrix factor, DomainSpec domain);
  static SelfMap composition(std::vector<SelfMap> maps, DomainSpec domain);

  const SelfMapVariant& variant() const { return variant_; }
  const DomainSpec& domain() const { return domain_; }

  /// Whether c(Psi(W)) is a function of c(W) alone (true for all variants
  /// except QuadPerturb, which is a local probe).
  bool spectrum_determined() const;

 private:
  SelfMapVariant variant_;
  DomainSpec domain_;
};

/// Applies the map; throws when the argument or image spectrum leaves the
/// declared domain, or a series tail bound is unachievable.
CMatrix apply(const SelfMap& psi, const CMatrix& w);

struct MembershipReport {
  bool inside = false;
  double margin = 0.0;  // min signed boundary distance over the spectrum
};

/// sigma(W) subset Omega, with the worst boundary margin.
MembershipReport domain_membership(const CMatrix& w, const DomainSpec& omega);

/// Entire curve through W with constant characteristic coefficients:
/// f(zeta) = exp(-C zeta) (D + zeta U) exp(C zeta), built from the Schur
/// factorization W = Q (D + U) Q* with C = log(Q*). f(1) = W.
CMatrix entire_curve(const CMatrix& w, Complex zeta);

/// Induced coefficient-space map G_Psi(z) = c(Psi(kappa(z))).
CoeffPoint induced_G(const SelfMap& psi, const CoeffPoint& z);

/// Coefficients of P_y(t - lambda): shifts every root of P_y by +lambda.
CoeffPoint coeff_translate(const CoeffPoint& y, Complex lambda);

struct DiagramReport {
  double error = 0.0;
  bool commutes = false;
};

/// Checks G_Psi(c(W)) == c(Psi(W)) at tolerance tol.
DiagramReport check_diagram(const SelfMap& psi, const CMatrix& w, double tol);

struct NumericJacobian {
  CMatrix matrix;
  double error_estimate = 0.0;
};

/// Central-difference Jacobian of G_Psi at `a`, Richardson extrapolated.
NumericJacobian numeric_jacobian_G(const SelfMap& psi, const CoeffPoint& a,
                                   double step = 1e-4);

struct IterationReport {
  std::vector<CoeffPoint> orbit;
  bool converged = false;
  std::optional<CoeffPoint> limit;
  CVector derivative_spectrum;  // of the numeric Jacobian at the limit
  int unimodular_count = 0;     // | |mu| - 1 | <= 1e-4
  int contracting_count = 0;    // |mu| < 1 - 1e-4
  int unresolved_count = 0;
};

/// Iterates G_Psi from z0 until the displacement drops below tol or the
/// budget runs out; classifies the derivative spectrum at a detected fixed
/// point.
IterationReport iterate_G(const SelfMap& psi, const CoeffPoint& z0,
                          int max_iter, double tol);

struct FixedSetReport {
  int eig_one_count = 0;
  int minpoly_degree = 0;
  bool theorem_holds = false;
  double fixed_point_deviation = 0.0;
  double derivative_deviation = 0.0;
};

/// Lower bound for the fixed-set dimension: the number of eigenvalues of
/// G'_Psi(c(A)) within 1e-4 of 1 must reach the minimal polynomial degree of
/// A. Requires Psi(A) = A within tol and Psi'(A) = I within 10 tol.
FixedSetReport fixed_set_dim_lower_bound(const SelfMap& psi, const CMatrix& a,
                                         double tol);

struct PreservationReport {
  std::vector<double> bottlenecks;
  bool preserving = false;
  bool profiles_compared = false;
  bool profiles_match = false;
};

/// Bottleneck distance between sigma(W) and sigma(Psi(W)) per sample; also
/// compares Jordan profiles at the first sample (conjugacy surrogate).
PreservationReport spectrum_preservation_check(const SelfMap& psi,
                                               const std::vector<CMatrix>& samples,
                                               double tol);

}  // namespace spectral
