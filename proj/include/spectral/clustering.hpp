#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spectral/charpoly_map.hpp"
#include "spectral/domain.hpp"
#include "spectral/selfmap_dynamics.hpp"
#include "spectral/types.hpp"

namespace spectral {

struct DeltaCertification {
  double analytic_radius = 0.0;  // Ostrowski-based sufficient radius
  double sampled_radius = 0.0;   // boundary-sampled radius that passed
  int trials = 0;
  std::uint64_t seed = 0;
};

/// Certified eigenvalue clustering of a base matrix A: centers lambda_i with
/// multiplicities n_i, a separation radius r (discs D(lambda_i; r) disjoint
/// and inside Omega), and a stability radius delta so that every W in the
/// entrywise polydisc P(A; delta) keeps n_i eigenvalues in disc i.
struct ClusterData {
  CMatrix base;
  DomainSpec omega = DomainSpec::whole_plane();
  std::vector<Complex> centers;
  std::vector<int> multiplicities;
  double r = 0.0;
  double delta = 0.0;
  DeltaCertification certification;

  int m() const { return static_cast<int>(centers.size()); }
  int n() const { return static_cast<int>(base.rows()); }
};

/// Element of prod_i Sigma^{n_i}(Omega): one CoeffPoint per cluster.
struct ThetaPoint {
  std::vector<CoeffPoint> components;
};

/// Per-cluster bases B_i: column j of bases[i] is the vector v^i_j defined by
/// the polynomial identity
///   P_{theta_i(A) + eta v^i_j}(t) = (t - lambda_i)^{n_i} + eta (t - lambda_i)^{n_i - j}.
struct LocalBasis {
  std::vector<CMatrix> bases;
  std::vector<double> condition_numbers;

  /// Block-diagonal assembled basis matrix [B] = [B_1] + ... + [B_m].
  CMatrix assembled() const;
};

/// Clusters sigma(A) (radius maximal under the separation and domain
/// constraints, times a 0.9 safety factor) and certifies delta analytically
/// plus by `trials` boundary samples of the polydisc.
ClusterData cluster_spectrum(const CMatrix& a, const DomainSpec& omega,
                             int trials, std::uint64_t seed);

/// theta(W): component i is sym_poly of the eigenvalues of W inside disc i.
/// Requires W in P(A; delta) unless allow_outside_polydisc; every eigenvalue
/// must sit in exactly one disc, clear of the boundary.
ThetaPoint theta(const CMatrix& w, const ClusterData& cluster,
                 bool allow_outside_polydisc = false);

/// tau: coefficient convolution, P_y = prod_i P_{x_i}.
CoeffPoint tau(const std::vector<CoeffPoint>& components);
CoeffPoint tau(const ThetaPoint& point);

/// Local inverse of tau on the clustered region: splits the roots of P_y by
/// disc membership. Throws on count mismatch or boundary-ambiguous roots.
std::vector<CoeffPoint> tau_local_inverse(const CoeffPoint& y, const ClusterData& cluster);

/// Closed-form construction of the bases B_i from the defining polynomial
/// identity (the identity, not the textbook closed form, is the source of
/// truth for signs).
LocalBasis local_basis(const ClusterData& cluster);

/// Block-diagonal perturbation direction D_k for cluster i0 (which must have
/// lambda_{i0} = 0 and a diagonal base matrix): the i0 block is
/// diag(omega_1..omega_k, 0..) with omega_j the roots of x^k + 1 = 0.
/// Satisfies theta(A + s D_k) = theta(A) + (-s)^k E^{i0}_k exactly for small
/// s, so theta(A + dk_step(eps,k) D_k) = theta(A) + eps E^{i0}_k.
CMatrix dk_matrix(const ClusterData& cluster, int i0, int k);

/// The branch of eps^(1/k) for which the D_k shift law lands on +eps.
Complex dk_step(Complex eps, int k);

/// Conjugate map F = tau^-1 o G o tau, realized through tau_local_inverse.
ThetaPoint conjugate_map_F(const std::function<CoeffPoint(const CoeffPoint&)>& g,
                           const ClusterData& cluster, const ThetaPoint& x);
ThetaPoint conjugate_map_F(const SelfMap& psi, const ClusterData& cluster,
                           const ThetaPoint& x);

struct BlockTraceReport {
  CMatrix block;             // estimated i0 diagonal block of F'(a*)
  Complex trace;
  double trace_error = 0.0;  // |trace - n_{i0}|
  double below_diag_max = 0.0;
  double diag_deviation_max = 0.0;
  int i0 = 0;
  double step = 0.0;
};

/// Finite-difference estimate (central, Richardson refined) of the i0-th
/// diagonal block of F'(theta(A)) for a map fixing A with derivative I along
/// the D_k probe directions. The block must be the identity plus a strictly
/// upper-triangular part, with trace n_{i0}.
BlockTraceReport verify_block_trace(const ClusterData& cluster,
                                    const std::function<CMatrix(const CMatrix&)>& psi,
                                    int i0, double step);
BlockTraceReport verify_block_trace(const ClusterData& cluster, const SelfMap& psi,
                                    int i0, double step);

}  // namespace spectral
