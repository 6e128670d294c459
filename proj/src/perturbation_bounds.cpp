#include "spectral/perturbation_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "spectral/serialization.hpp"

namespace spectral {

namespace {

Eigen::MatrixXd pairwise_distances(const Spectrum& s1, const Spectrum& s2) {
  const int n = s1.size();
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = std::abs(s2.values(j) - s1.values(i));
  return d;
}

// Perfect matching in the bipartite graph { (i,j) : dist(i,j) <= limit } by
// augmenting paths; fills `match_of_right` when successful.
bool feasible(const Eigen::MatrixXd& dist, double limit, std::vector<int>* match_of_right) {
  const int n = static_cast<int>(dist.rows());
  std::vector<int> right(n, -1);

  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int i) -> bool {
    for (int j = 0; j < n; ++j) {
      if (visited[static_cast<size_t>(j)] || dist(i, j) > limit) continue;
      visited[static_cast<size_t>(j)] = 1;
      if (right[static_cast<size_t>(j)] < 0 || augment(right[static_cast<size_t>(j)])) {
        right[static_cast<size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };

  for (int i = 0; i < n; ++i) {
    visited.assign(static_cast<size_t>(n), 0);
    if (!augment(i)) return false;
  }
  if (match_of_right) *match_of_right = right;
  return true;
}

}  // namespace

MatchResult bottleneck_match_exhaustive(const Spectrum& s1, const Spectrum& s2) {
  const int n = s1.size();
  if (n != s2.size()) throw Error("bottleneck_match: length mismatch");
  const Eigen::MatrixXd dist = pairwise_distances(s1, s2);

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double best_value = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, dist(i, perm[static_cast<size_t>(i)]));
    if (worst < best_value) {
      best_value = worst;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return MatchResult{best, best_value, MatchMethod::Exhaustive};
}

MatchResult bottleneck_match_threshold(const Spectrum& s1, const Spectrum& s2) {
  const int n = s1.size();
  if (n != s2.size()) throw Error("bottleneck_match: length mismatch");
  const Eigen::MatrixXd dist = pairwise_distances(s1, s2);

  std::vector<double> candidates;
  candidates.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) candidates.push_back(dist(i, j));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Binary search for the smallest feasible candidate distance.
  int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (feasible(dist, candidates[static_cast<size_t>(mid)], nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  std::vector<int> right;
  if (!feasible(dist, candidates[static_cast<size_t>(lo)], &right))
    throw Error("bottleneck_match: no feasible matching at maximal distance");

  std::vector<int> perm(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) perm[static_cast<size_t>(right[static_cast<size_t>(j)])] = j;
  return MatchResult{perm, candidates[static_cast<size_t>(lo)], MatchMethod::ThresholdMatching};
}

MatchResult bottleneck_match(const Spectrum& s1, const Spectrum& s2) {
  if (s1.size() != s2.size()) throw Error("bottleneck_match: length mismatch");
  if (s1.size() <= 6) return bottleneck_match_exhaustive(s1, s2);
  return bottleneck_match_threshold(s1, s2);
}

BoundReport check_sun_bound(const CMatrix& x, const CMatrix& y) {
  require_square(x, "check_sun_bound");
  if (x.rows() != y.rows() || y.rows() != y.cols())
    throw Error("check_sun_bound: dimension mismatch");
  const double scale = x.norm();
  const double commutator = (x * x.adjoint() - x.adjoint() * x).norm();
  if (commutator > 1e-10 * std::max(1e-300, scale * scale))
    throw ConvergenceError("check_sun_bound: X is not normal", commutator);

  const int n = static_cast<int>(x.rows());
  BoundReport report;
  report.lhs = bottleneck_match(eigenvalues(x), eigenvalues(y)).bottleneck;
  report.rhs = n * operator_norm(x - y);
  report.slack = report.rhs - report.lhs;
  report.inputs_digest = digest(nlohmann::json{{"X", to_json(x)}, {"Y", to_json(y)}});
  report.verdict = report.lhs <= report.rhs + 1e-12 ? Verdict::Holds : Verdict::Violated;
  return report;
}

double ostrowski_T(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw Error("ostrowski_T: degree mismatch");
  double t = 1.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    const double e = 1.0 / static_cast<double>(j + 1);
    t = std::max({t, std::pow(std::abs(a(j)), e), std::pow(std::abs(b(j)), e)});
  }
  return t;
}

double ostrowski_rhs(const CVector& a, const CVector& b) {
  const double n = static_cast<double>(a.size());
  return 4.0 * n * ostrowski_T(a, b) * std::pow((a - b).norm(), 1.0 / n);
}

BoundReport check_ostrowski_bound(const CVector& a, const CVector& b) {
  if (a.size() != b.size() || a.size() < 1)
    throw Error("check_ostrowski_bound: degree mismatch");

  const Spectrum ra = coeff_roots(from_plain_coeffs(a));
  const Spectrum rb = coeff_roots(from_plain_coeffs(b));

  BoundReport report;
  report.lhs = bottleneck_match(ra, rb).bottleneck;
  report.rhs = ostrowski_rhs(a, b);
  report.slack = report.rhs - report.lhs;
  report.inputs_digest = digest(nlohmann::json{{"a", to_json(a)}, {"b", to_json(b)}});
  report.verdict = report.lhs <= report.rhs + 1e-12 ? Verdict::Holds : Verdict::Violated;
  return report;
}

CMatrix openness_witness(const CMatrix& x, const CoeffPoint& y, const DomainSpec& omega) {
  require_square(x, "openness_witness");
  require_finite(x, "openness_witness");
  const int n = static_cast<int>(x.rows());
  if (y.n() != n) throw Error("openness_witness: dimension mismatch");

  // Unitary Schur triangularization X = Q (diag(lambda) + U) Q*.
  Eigen::ComplexSchur<CMatrix> schur(x);
  if (schur.info() != Eigen::Success)
    throw ConvergenceError("openness_witness: Schur iteration failed", x.norm());
  const CMatrix q = schur.matrixU();
  const CMatrix t = schur.matrixT();

  const CVector lambdas = t.diagonal();
  const Spectrum target_roots = coeff_roots(y);

  // Match target roots to the Schur diagonal order.
  const MatchResult match =
      bottleneck_match(Spectrum{lambdas}, target_roots);

  const CoeffPoint cx = char_coeffs(x);
  const double trust = ostrowski_rhs(plain_coeffs(cx), plain_coeffs(y));

  CVector mu(n);
  for (int j = 0; j < n; ++j) {
    mu(j) = target_roots.values(match.permutation[static_cast<size_t>(j)]);
    const double displacement = std::abs(mu(j) - lambdas(j));
    if (displacement > trust + 1e-12)
      throw Error("openness_witness: matched root displaced " +
                  std::to_string(displacement) + " beyond the trust radius " +
                  std::to_string(trust));
    if (!omega.contains(mu(j)))
      throw Error("openness_witness: matched root exits the domain");
  }

  CMatrix shifted = t;
  shifted.diagonal() = mu;
  return q * shifted * q.adjoint();
}

}  // namespace spectral
