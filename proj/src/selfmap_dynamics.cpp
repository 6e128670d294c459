#include "spectral/selfmap_dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "spectral/perturbation_bounds.hpp"

namespace spectral {

SelfMap SelfMap::identity(DomainSpec domain) {
  CVector coeffs(2);
  coeffs << Complex(0.0), Complex(1.0);
  return polynomial(std::move(coeffs), std::move(domain));
}

SelfMap SelfMap::polynomial(CVector coeffs, DomainSpec domain) {
  return SelfMap(PolynomialMap{std::move(coeffs)}, std::move(domain));
}

SelfMap SelfMap::power_series(CVector coeffs, double radius, double coeff_bound,
                              DomainSpec domain) {
  if (radius <= 0.0) throw Error("SelfMap::power_series: radius must be positive");
  return SelfMap(PowerSeriesMap{std::move(coeffs), radius, coeff_bound},
                 std::move(domain));
}

SelfMap SelfMap::rational(CVector num, CVector den, DomainSpec domain) {
  return SelfMap(RationalMap{std::move(num), std::move(den)}, std::move(domain));
}

SelfMap SelfMap::conjugation(CMatrix s, DomainSpec domain) {
  require_square(s, "SelfMap::conjugation");
  return SelfMap(Conjugation{std::move(s)}, std::move(domain));
}

SelfMap SelfMap::translation(Complex lambda, DomainSpec domain) {
  return SelfMap(Translation{lambda}, std::move(domain));
}

SelfMap SelfMap::exp_shift(DomainSpec domain) {
  return SelfMap(ExpShift{}, std::move(domain));
}

SelfMap SelfMap::quad_perturb(CMatrix base, CMatrix factor, DomainSpec domain) {
  require_square(base, "SelfMap::quad_perturb");
  return SelfMap(QuadPerturb{std::move(base), std::move(factor)}, std::move(domain));
}

SelfMap SelfMap::composition(std::vector<SelfMap> maps, DomainSpec domain) {
  return SelfMap(Composition{std::move(maps)}, std::move(domain));
}

bool SelfMap::spectrum_determined() const {
  if (std::holds_alternative<QuadPerturb>(variant_)) return false;
  if (const auto* comp = std::get_if<Composition>(&variant_)) {
    for (const auto& inner : comp->maps)
      if (!inner.spectrum_determined()) return false;
  }
  return true;
}

MembershipReport domain_membership(const CMatrix& w, const DomainSpec& omega) {
  const Spectrum spec = eigenvalues(w);
  MembershipReport report;
  report.inside = true;
  report.margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < spec.values.size(); ++i) {
    const double margin = omega.boundary_distance(spec.values(i));
    report.margin = std::min(report.margin, margin);
    if (margin <= 0.0) report.inside = false;
  }
  return report;
}

namespace {

CMatrix horner(const CVector& coeffs, const CMatrix& w) {
  const Eigen::Index n = w.rows();
  if (coeffs.size() == 0) return CMatrix::Zero(n, n);
  CMatrix acc = coeffs(coeffs.size() - 1) * CMatrix::Identity(n, n);
  for (Eigen::Index k = coeffs.size() - 2; k >= 0; --k)
    acc = acc * w + coeffs(k) * CMatrix::Identity(n, n);
  return acc;
}

struct ApplyVisitor {
  const CMatrix& w;
  const DomainSpec& domain;

  CMatrix operator()(const PolynomialMap& m) const { return horner(m.coeffs, w); }

  CMatrix operator()(const PowerSeriesMap& m) const {
    const double wnorm = operator_norm(w);
    const double q = wnorm / m.radius;
    if (q >= 1.0)
      throw Error("apply: spectrum bound " + std::to_string(wnorm) +
                  " reaches the series radius " + std::to_string(m.radius));
    const CMatrix sum = horner(m.coeffs, w);
    // Tail of the untabulated coefficients under |a_k| <= M / radius^k.
    const double tail = m.coeff_bound *
                        std::pow(q, static_cast<double>(m.coeffs.size())) /
                        (1.0 - q);
    if (tail > 1e-12 * std::max(1.0, sum.norm()))
      throw ConvergenceError("apply: series tail bound unachievable", tail);
    return sum;
  }

  CMatrix operator()(const RationalMap& m) const {
    const CMatrix den = horner(m.den, w);
    Eigen::PartialPivLU<CMatrix> lu(den);
    const CMatrix num = horner(m.num, w);
    const CMatrix result = lu.solve(num);
    if (relative_error(den * result, num) > 1e-8)
      throw Error("apply: denominator polynomial is singular on the spectrum");
    return result;
  }

  CMatrix operator()(const Conjugation& m) const {
    return m.s.partialPivLu().solve(w * m.s);
  }

  CMatrix operator()(const Translation& m) const {
    return w - m.lambda * CMatrix::Identity(w.rows(), w.cols());
  }

  CMatrix operator()(const ExpShift&) const {
    return matrix_exp(w - CMatrix::Identity(w.rows(), w.cols()));
  }

  CMatrix operator()(const QuadPerturb& m) const {
    const CMatrix d = w - m.base;
    return w + d * d * m.factor;
  }

  CMatrix operator()(const Composition& m) const {
    CMatrix acc = w;
    for (auto it = m.maps.rbegin(); it != m.maps.rend(); ++it) acc = apply(*it, acc);
    return acc;
  }
};

}  // namespace

CMatrix apply(const SelfMap& psi, const CMatrix& w) {
  require_square(w, "apply");
  require_finite(w, "apply");
  if (!domain_membership(w, psi.domain()).inside)
    throw Error("apply: argument spectrum leaves the declared domain");
  CMatrix result = std::visit(ApplyVisitor{w, psi.domain()}, psi.variant());
  if (!domain_membership(result, psi.domain()).inside)
    throw Error("apply: image spectrum leaves the declared codomain");
  return result;
}

namespace {

// Principal logarithm of a (numerically) unitary matrix via its Schur form,
// which is essentially diagonal for normal input.
CMatrix log_unitary(const CMatrix& q) {
  Eigen::ComplexSchur<CMatrix> schur(q);
  if (schur.info() != Eigen::Success)
    throw ConvergenceError("entire_curve: Schur of the unitary factor failed", q.norm());
  const CMatrix u = schur.matrixU();
  CVector logs(q.rows());
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    logs(i) = std::log(schur.matrixT()(i, i));
  return u * logs.asDiagonal() * u.adjoint();
}

}  // namespace

CMatrix entire_curve(const CMatrix& w, Complex zeta) {
  require_square(w, "entire_curve");
  require_finite(w, "entire_curve");
  const Eigen::Index n = w.rows();

  Eigen::ComplexSchur<CMatrix> schur(w);
  if (schur.info() != Eigen::Success)
    throw ConvergenceError("entire_curve: Schur iteration failed", w.norm());
  const CMatrix q = schur.matrixU();
  const CMatrix t = schur.matrixT();
  const CMatrix d = t.diagonal().asDiagonal();
  const CMatrix upper = t - d;

  const CMatrix c = log_unitary(q.adjoint());
  const double scale = std::max(1.0, w.norm());
  if ((matrix_exp(c) - q.adjoint()).norm() > 1e-9 * scale)
    throw ConvergenceError("entire_curve: logarithm of the unitary factor is inconsistent",
                           (matrix_exp(c) - q.adjoint()).norm());

  const CMatrix left = matrix_exp(-zeta * c);
  const CMatrix right = matrix_exp(zeta * c);
  return left * (d + zeta * upper) * right;
  (void)n;
}

CoeffPoint induced_G(const SelfMap& psi, const CoeffPoint& z) {
  return char_coeffs(apply(psi, companion(z)));
}

CoeffPoint coeff_translate(const CoeffPoint& y, Complex lambda) {
  const int n = y.n();
  // Full plain coefficient vector p_0..p_n of P_y (descending powers,
  // p_0 = 1), then q(t) = P_y(t - lambda) by binomial re-expansion.
  CVector p(n + 1);
  p(0) = 1.0;
  p.tail(n) = plain_coeffs(y);

  // Pascal triangle up to n.
  std::vector<std::vector<double>> binom(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    binom[static_cast<size_t>(i)].assign(static_cast<size_t>(i + 1), 1.0);
    for (int j = 1; j < i; ++j)
      binom[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          binom[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  }

  CVector q = CVector::Zero(n + 1);
  for (int j = 0; j <= n; ++j) {
    // p_j (t - lambda)^(n-j) contributes to all lower powers.
    const int deg = n - j;
    Complex power = 1.0;  // (-lambda)^s
    for (int s = 0; s <= deg; ++s) {
      q(j + s) += p(j) * binom[static_cast<size_t>(deg)][static_cast<size_t>(s)] * power;
      power *= -lambda;
    }
  }
  return from_plain_coeffs(q.tail(n));
}

DiagramReport check_diagram(const SelfMap& psi, const CMatrix& w, double tol) {
  const CoeffPoint through_matrix = char_coeffs(apply(psi, w));
  const CoeffPoint through_coeffs = induced_G(psi, char_coeffs(w));
  DiagramReport report;
  report.error = distance(through_matrix, through_coeffs);
  report.commutes = report.error <= tol;
  return report;
}

NumericJacobian numeric_jacobian_G(const SelfMap& psi, const CoeffPoint& a,
                                   double step) {
  const int n = a.n();
  auto jacobian_at = [&](double h) {
    CMatrix j(n, n);
    for (int col = 0; col < n; ++col) {
      CoeffPoint plus = a, minus = a;
      plus.z(col) += h;
      minus.z(col) -= h;
      j.col(col) = (induced_G(psi, plus).z - induced_G(psi, minus).z) / (2.0 * h);
    }
    return j;
  };
  const CMatrix coarse = jacobian_at(step);
  const CMatrix fine = jacobian_at(step / 2.0);
  NumericJacobian result;
  result.matrix = (4.0 * fine - coarse) / 3.0;
  result.error_estimate = (fine - coarse).norm() / 3.0;
  return result;
}

IterationReport iterate_G(const SelfMap& psi, const CoeffPoint& z0,
                          int max_iter, double tol) {
  IterationReport report;
  report.orbit.push_back(z0);
  CoeffPoint z = z0;
  for (int k = 0; k < max_iter; ++k) {
    CoeffPoint next = induced_G(psi, z);
    const double displacement = distance(next, z);
    report.orbit.push_back(next);
    z = next;
    if (displacement < tol) {
      report.converged = true;
      break;
    }
  }
  if (!report.converged) return report;

  report.limit = z;
  const NumericJacobian jac = numeric_jacobian_G(psi, z, 1e-5);
  report.derivative_spectrum = eigenvalues(jac.matrix).values;
  for (Eigen::Index i = 0; i < report.derivative_spectrum.size(); ++i) {
    const double modulus = std::abs(report.derivative_spectrum(i));
    if (std::abs(modulus - 1.0) <= 1e-4)
      ++report.unimodular_count;
    else if (modulus < 1.0 - 1e-4)
      ++report.contracting_count;
    else
      ++report.unresolved_count;
  }
  return report;
}

namespace {

// Max deviation of the directional derivative of psi at `a` from the
// identity, probed along every elementary matrix direction.
double derivative_identity_deviation(const SelfMap& psi, const CMatrix& a,
                                     double h) {
  const Eigen::Index n = a.rows();
  double worst = 0.0;
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) {
      CMatrix direction = CMatrix::Zero(n, n);
      direction(row, col) = 1.0;
      const CMatrix diff =
          (apply(psi, a + h * direction) - apply(psi, a - h * direction)) / (2.0 * h);
      worst = std::max(worst, (diff - direction).norm());
    }
  }
  return worst;
}

}  // namespace

FixedSetReport fixed_set_dim_lower_bound(const SelfMap& psi, const CMatrix& a,
                                         double tol) {
  FixedSetReport report;
  const double scale = std::max(1.0, a.norm());
  report.fixed_point_deviation = (apply(psi, a) - a).norm() / scale;
  if (report.fixed_point_deviation > tol)
    throw ConvergenceError("fixed_set_dim_lower_bound: psi does not fix A",
                           report.fixed_point_deviation);
  report.derivative_deviation = derivative_identity_deviation(psi, a, 1e-5);
  if (report.derivative_deviation > 10.0 * tol)
    throw ConvergenceError(
        "fixed_set_dim_lower_bound: derivative of psi at A is not the identity",
        report.derivative_deviation);

  const CoeffPoint a_coeffs = char_coeffs(a);
  const NumericJacobian jac = numeric_jacobian_G(psi, a_coeffs, 1e-4);
  const Spectrum spec = eigenvalues(jac.matrix);
  for (Eigen::Index i = 0; i < spec.values.size(); ++i)
    if (std::abs(spec.values(i) - Complex(1.0)) <= 1e-4) ++report.eig_one_count;

  const MinPolyResult mp = min_poly_degree(a);
  report.minpoly_degree = mp.degree;
  report.theorem_holds = report.eig_one_count >= report.minpoly_degree;
  return report;
}

PreservationReport spectrum_preservation_check(const SelfMap& psi,
                                               const std::vector<CMatrix>& samples,
                                               double tol) {
  PreservationReport report;
  report.preserving = true;
  for (const auto& w : samples) {
    const CMatrix image = apply(psi, w);
    const double bottleneck =
        bottleneck_distance_for_check(eigenvalues(w), eigenvalues(image));
    report.bottlenecks.push_back(bottleneck);
    if (bottleneck > tol) report.preserving = false;
  }
  if (!samples.empty()) {
    try {
      const JordanProfile before = jordan_profile(samples.front());
      const JordanProfile after = jordan_profile(apply(psi, samples.front()));
      report.profiles_compared = true;
      report.profiles_match = same_profile(before, after, 100.0 * tol);
    } catch (const Error&) {
      report.profiles_compared = false;
    }
  }
  return report;
}

}  // namespace spectral
