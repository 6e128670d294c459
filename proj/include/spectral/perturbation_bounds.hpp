#pragma once

#include <string>
#include <vector>

#include "spectral/charpoly_map.hpp"
#include "spectral/domain.hpp"
#include "spectral/types.hpp"

namespace spectral {

enum class MatchMethod { Exhaustive, ThresholdMatching };

/// Min-max optimal pairing of two equal-length spectra: s2[permutation[j]]
/// is matched with s1[j].
struct MatchResult {
  std::vector<int> permutation;
  double bottleneck = 0.0;
  MatchMethod method = MatchMethod::Exhaustive;
};

/// Optimal bottleneck matching; exhaustive for n <= 6, binary search over
/// candidate distances with augmenting-path feasibility above.
MatchResult bottleneck_match(const Spectrum& s1, const Spectrum& s2);
MatchResult bottleneck_match_exhaustive(const Spectrum& s1, const Spectrum& s2);
MatchResult bottleneck_match_threshold(const Spectrum& s1, const Spectrum& s2);

enum class Verdict { Holds, Violated };

struct BoundReport {
  double lhs = 0.0;  // achieved bottleneck distance
  double rhs = 0.0;  // theoretical bound
  double slack = 0.0;
  std::string inputs_digest;
  Verdict verdict = Verdict::Holds;
};

/// Eigenvalue variation of a normal matrix X against an arbitrary Y:
/// bottleneck(sigma(X), sigma(Y)) <= n ||X - Y||_op. Throws if X is not
/// normal (commutator residual above 1e-10 ||X||^2).
BoundReport check_sun_bound(const CMatrix& x, const CMatrix& y);

/// Root variation of two monic polynomials given by plain coefficients
/// (a_1..a_n multiply t^(n-1)..t^0): bottleneck of the root multisets is at
/// most 4 n T ||a-b||_2^(1/n).
BoundReport check_ostrowski_bound(const CVector& a, const CVector& b);

double ostrowski_T(const CVector& a, const CVector& b);
double ostrowski_rhs(const CVector& a, const CVector& b);

/// Constructive openness of the coefficient map: produces Y with
/// char_coeffs(Y) = y and ||Y - X||_op bounded by the matched eigenvalue
/// displacement (unitary Schur similarity). Throws when a matched root exits
/// Omega or the trust radius 4 n T ||c(X) - y||^(1/n).
CMatrix openness_witness(const CMatrix& x, const CoeffPoint& y, const DomainSpec& omega);

}  // namespace spectral
