#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spectral {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Library-wide default tolerances: residual-style checks vs comparisons of
// values transported through a similarity.
inline constexpr double kResidualTol = 1e-8;
inline constexpr double kTransportTol = 1e-7;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Failure of an iterative kernel; carries the last residual seen.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double res)
      : Error(what + " (residual=" + std::to_string(res) + ")"), residual(res) {}
  double residual;
};

inline bool is_finite(const CMatrix& m) { return m.allFinite(); }

inline void require_finite(const CMatrix& m, const char* who) {
  if (!m.allFinite()) throw Error(std::string(who) + ": non-finite entries");
}

inline void require_square(const CMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw Error(std::string(who) + ": matrix must be square and non-empty");
}

/// Multiset of eigenvalues repeated with algebraic multiplicity, held in the
/// canonical order: lexicographic by (Re, Im) after rounding to 12 decimal
/// digits so reports are deterministic.
struct Spectrum {
  CVector values;
  int size() const { return static_cast<int>(values.size()); }
};

/// Canonicalizes a raw eigenvalue list into a Spectrum.
Spectrum make_spectrum(CVector values);

/// Point of C^n in the signed coefficient convention
///   P_z(t) = t^n + sum_{j=1..n} (-1)^j z_j t^(n-j).
struct CoeffPoint {
  CVector z;

  CoeffPoint() = default;
  explicit CoeffPoint(CVector coords) : z(std::move(coords)) {}

  int n() const { return static_cast<int>(z.size()); }
  Complex operator[](int j) const { return z(j); }  // 0-based
};

inline double distance(const CoeffPoint& a, const CoeffPoint& b) {
  return (a.z - b.z).norm();
}

struct JordanBlockGroup {
  Complex eigenvalue;
  std::vector<int> block_sizes;  // descending
};

/// Jordan structure recovered from rank staircases of (A - lambda I)^k.
struct JordanProfile {
  std::vector<JordanBlockGroup> groups;
  double tol = 0.0;

  int dimension() const {
    int n = 0;
    for (const auto& g : groups)
      for (int s : g.block_sizes) n += s;
    return n;
  }
};

/// True when the two profiles describe the same Jordan structure with
/// eigenvalues matched within `tol`.
bool same_profile(const JordanProfile& a, const JordanProfile& b, double tol);

}  // namespace spectral
