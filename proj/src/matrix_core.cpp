#include "spectral/matrix_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace spectral {

namespace {

double round12(double x) {
  // Sort key only; stored values stay unrounded.
  return std::round(x * 1e12) / 1e12;
}

}  // namespace

Spectrum make_spectrum(CVector values) {
  std::vector<Complex> v(values.data(), values.data() + values.size());
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    const double ra = round12(a.real()), rb = round12(b.real());
    if (ra != rb) return ra < rb;
    return round12(a.imag()) < round12(b.imag());
  });
  CVector out(values.size());
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = v[static_cast<size_t>(i)];
  return Spectrum{std::move(out)};
}

Spectrum eigenvalues(const CMatrix& m, double tol) {
  require_square(m, "eigenvalues");
  require_finite(m, "eigenvalues");
  if (m.rows() == 1) return make_spectrum(m.diagonal());

  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    // Residual of the failed Schur iteration is not exposed; report the scale.
    throw ConvergenceError("eigenvalues: Schur iteration did not converge",
                           m.norm());
  }
  (void)tol;
  return make_spectrum(solver.eigenvalues());
}

double operator_norm(const CMatrix& m) {
  require_finite(m, "operator_norm");
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

CMatrix matrix_exp(const CMatrix& m) {
  require_square(m, "matrix_exp");
  require_finite(m, "matrix_exp");
  const Eigen::Index n = m.rows();
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  if (!std::isfinite(norm) || norm > 1e12)
    throw Error("matrix_exp: norm too large, scaling would overflow");

  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const CMatrix t = m / std::pow(2.0, squarings);

  // Taylor series of exp(t); ||t|| <= 0.5 so ~20 terms reach full precision.
  CMatrix result = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * t) / static_cast<double>(k);
    result += term;
    if (term.norm() <= 1e-20 * result.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

int numerical_rank(const CMatrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  return rank;
}

double relative_error(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

MinPolyResult min_poly_degree(const CMatrix& m, double tol) {
  require_square(m, "min_poly_degree");
  require_finite(m, "min_poly_degree");
  const Eigen::Index n = m.rows();

  // Stack vec(M^k) as columns; test membership of vec(M^d) in the span of the
  // previous powers by column-pivoted least squares.
  std::vector<CMatrix> powers;
  powers.push_back(CMatrix::Identity(n, n));
  for (int k = 1; k <= n; ++k) powers.push_back(powers.back() * m);

  auto flatten = [n](const CMatrix& a) {
    return CVector(Eigen::Map<const CVector>(a.data(), n * n));
  };

  MinPolyResult result;
  for (int d = 1; d <= n; ++d) {
    CMatrix basis(n * n, d);
    for (int k = 0; k < d; ++k) basis.col(k) = flatten(powers[static_cast<size_t>(k)]);
    const CVector target = flatten(powers[static_cast<size_t>(d)]);
    const double scale = std::max(basis.norm(), target.norm());

    const CVector coeff = basis.colPivHouseholderQr().solve(target);
    const double residual = (basis * coeff - target).norm() / std::max(1.0, scale);

    if (residual <= tol) {
      result.degree = d;
      result.residual = residual;
      result.uncertain = result.uncertain || residual > tol / 10.0;
      return result;
    }
    if (d == n) {
      // The Cayley-Hamilton degree always succeeds; a large residual here
      // signals conditioning trouble rather than a higher degree.
      result.degree = n;
      result.residual = residual;
      result.uncertain = residual > tol / 10.0;
    } else if (residual < 10.0 * tol) {
      // Rejected, but only barely: remember the ambiguity in case a later
      // degree is accepted cleanly.
      result.uncertain = true;
    }
  }
  result.degree = static_cast<int>(n);
  return result;
}

namespace {

// Greedy single-linkage clustering of eigenvalues at the given radius.
struct Cluster {
  Complex center;
  std::vector<Complex> members;
};

std::vector<Cluster> cluster_values(const CVector& values, double radius) {
  std::vector<Cluster> clusters;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const Complex v = values(i);
    bool placed = false;
    for (auto& c : clusters) {
      for (Complex w : c.members) {
        if (std::abs(v - w) <= radius) {
          c.members.push_back(v);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) clusters.push_back({v, {v}});
  }
  for (auto& c : clusters) {
    Complex sum = 0.0;
    for (Complex w : c.members) sum += w;
    c.center = sum / static_cast<double>(c.members.size());
  }
  return clusters;
}

}  // namespace

JordanProfile jordan_profile(const CMatrix& m, double tol) {
  require_square(m, "jordan_profile");
  require_finite(m, "jordan_profile");
  const Eigen::Index n = m.rows();
  const double scale = std::max(1.0, m.norm());

  const Spectrum spec = eigenvalues(m);
  const double cluster_radius = 10.0 * tol * scale;
  auto clusters = cluster_values(spec.values, cluster_radius);

  // Distinct clusters must be separated clearly beyond the merge radius.
  for (size_t a = 0; a < clusters.size(); ++a) {
    for (size_t b = a + 1; b < clusters.size(); ++b) {
      const double gap = std::abs(clusters[a].center - clusters[b].center);
      if (gap <= 2.0 * cluster_radius)
        throw Error("jordan_profile: eigenvalue clusters at " +
                    std::to_string(clusters[a].center.real()) + "+" +
                    std::to_string(clusters[a].center.imag()) + "i and " +
                    std::to_string(clusters[b].center.real()) + "+" +
                    std::to_string(clusters[b].center.imag()) +
                    "i are too close to resolve");
    }
  }

  JordanProfile profile;
  profile.tol = tol;
  for (const auto& c : clusters) {
    const int mult = static_cast<int>(c.members.size());
    // Rank staircase of (M - lambda I)^k. Number of blocks of size >= k is
    // rank((M-lambda)^(k-1)) - rank((M-lambda)^k).
    const CMatrix shifted = m - c.center * CMatrix::Identity(n, n);
    std::vector<int> ranks;  // ranks[k] = rank(shifted^k), k = 0..mult
    ranks.push_back(static_cast<int>(n));
    CMatrix power = CMatrix::Identity(n, n);
    for (int k = 1; k <= mult; ++k) {
      power = power * shifted;
      // The rank gap from the other eigenvalues' invariant subspace stays
      // full; threshold relative to the power's own scale.
      ranks.push_back(numerical_rank(power, tol));
    }
    std::vector<int> block_sizes;
    for (int k = 1; k <= mult; ++k) {
      const int at_least_k = ranks[static_cast<size_t>(k - 1)] - ranks[static_cast<size_t>(k)];
      const int at_least_k1 = (k < mult)
          ? ranks[static_cast<size_t>(k)] - ranks[static_cast<size_t>(k + 1)]
          : 0;
      const int exactly_k = at_least_k - at_least_k1;
      for (int b = 0; b < exactly_k; ++b) block_sizes.push_back(k);
    }
    std::sort(block_sizes.rbegin(), block_sizes.rend());
    int total = 0;
    for (int s : block_sizes) total += s;
    if (total != mult)
      throw Error("jordan_profile: rank staircase inconsistent with multiplicity");
    profile.groups.push_back({c.center, std::move(block_sizes)});
  }

  std::sort(profile.groups.begin(), profile.groups.end(),
            [](const JordanBlockGroup& a, const JordanBlockGroup& b) {
              if (a.eigenvalue.real() != b.eigenvalue.real())
                return a.eigenvalue.real() < b.eigenvalue.real();
              return a.eigenvalue.imag() < b.eigenvalue.imag();
            });
  return profile;
}

bool same_profile(const JordanProfile& a, const JordanProfile& b, double tol) {
  if (a.groups.size() != b.groups.size()) return false;
  for (size_t i = 0; i < a.groups.size(); ++i) {
    if (std::abs(a.groups[i].eigenvalue - b.groups[i].eigenvalue) > tol) return false;
    if (a.groups[i].block_sizes != b.groups[i].block_sizes) return false;
  }
  return true;
}

}  // namespace spectral
