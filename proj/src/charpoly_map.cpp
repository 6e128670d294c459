#include "spectral/charpoly_map.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/SVD>

namespace spectral {

CoeffPoint char_coeffs(const CMatrix& w) {
  require_square(w, "char_coeffs");
  require_finite(w, "char_coeffs");
  const Eigen::Index n = w.rows();

  // Faddeev-LeVerrier in the plain convention
  //   det(tI - W) = t^n + a_1 t^(n-1) + ... + a_n,
  // then the signed coordinates are z_k = (-1)^k a_k.
  CVector a(n);
  CMatrix b = w;  // B_1 = W
  a(0) = -b.trace();
  for (Eigen::Index k = 2; k <= n; ++k) {
    b = w * (b + a(k - 2) * CMatrix::Identity(n, n));
    a(k - 1) = -b.trace() / static_cast<double>(k);
  }

  CVector z(n);
  double sign = -1.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    z(k) = sign * a(k);
    sign = -sign;
  }
  return CoeffPoint(std::move(z));
}

CoeffPoint sym_poly(const CVector& roots) {
  const Eigen::Index n = roots.size();
  if (n < 1) throw Error("sym_poly: need at least one root");

  // Expand prod (t - r_j) by convolution; plain[j] holds a_j.
  CVector plain = CVector::Zero(n + 1);
  plain(0) = 1.0;  // leading coefficient
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k >= 1; --k)
      plain(k) -= roots(j) * plain(k - 1);
  }

  CVector z(n);
  double sign = -1.0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    z(k - 1) = sign * plain(k);
    sign = -sign;
  }
  return CoeffPoint(std::move(z));
}

Complex eval_P(const CoeffPoint& x, Complex t) {
  const int n = x.n();
  Complex acc = 1.0;
  double sign = -1.0;
  for (int j = 1; j <= n; ++j) {
    acc = acc * t + sign * x.z(j - 1);
    sign = -sign;
  }
  return acc;
}

CVector plain_coeffs(const CoeffPoint& x) {
  CVector a(x.n());
  double sign = -1.0;
  for (int j = 0; j < x.n(); ++j) {
    a(j) = sign * x.z(j);
    sign = -sign;
  }
  return a;
}

CoeffPoint from_plain_coeffs(const CVector& a) {
  CVector z(a.size());
  double sign = -1.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    z(j) = sign * a(j);
    sign = -sign;
  }
  return CoeffPoint(std::move(z));
}

CMatrix companion(const CoeffPoint& x) {
  const int n = x.n();
  if (n < 1) throw Error("companion: empty coefficient point");
  const CVector a = plain_coeffs(x);
  CMatrix c = CMatrix::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -a(n - 1 - i);
  return c;
}

Spectrum coeff_roots(const CoeffPoint& x, double tol) {
  if (x.n() == 1) {
    CVector roots(1);
    roots(0) = x.z(0);  // P_x(t) = t - x_1
    return make_spectrum(roots);
  }
  return eigenvalues(companion(x), tol);
}

JacobianReport jacobian_c(const CMatrix& a, double tol) {
  require_square(a, "jacobian_c");
  require_finite(a, "jacobian_c");
  const Eigen::Index n = a.rows();

  // Powers A^0..A^(n-1), power sums p_i = trace(A^i), and e_k = c_k via
  // Newton's identities. The directional derivative of p_i along H is
  // i * trace(A^(i-1) H) = i * sum_jk (A^(i-1))_kj H_jk, which is exact.
  std::vector<CMatrix> powers;
  powers.push_back(CMatrix::Identity(n, n));
  for (Eigen::Index i = 1; i < n; ++i) powers.push_back(powers.back() * a);

  CVector p(n);  // p(i-1) = trace(A^i)
  for (Eigen::Index i = 1; i <= n; ++i) p(i - 1) = (powers[static_cast<size_t>(i - 1)] * a).trace();

  CVector e(n + 1);  // e(k) = e_k, e_0 = 1
  e(0) = 1.0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Complex acc = 0.0;
    double sign = 1.0;
    for (Eigen::Index i = 1; i <= k; ++i) {
      acc += sign * e(k - i) * p(i - 1);
      sign = -sign;
    }
    e(k) = acc / static_cast<double>(k);
  }

  // dp(i-1) = n^2-row vector of d p_i / d A_(row,col), column-major layout.
  CMatrix dp(n, n * n);
  for (Eigen::Index i = 1; i <= n; ++i) {
    const CMatrix& am = powers[static_cast<size_t>(i - 1)];  // A^(i-1)
    for (Eigen::Index col = 0; col < n; ++col)
      for (Eigen::Index row = 0; row < n; ++row)
        dp(i - 1, row + n * col) = static_cast<double>(i) * am(col, row);
  }

  CMatrix de = CMatrix::Zero(n + 1, n * n);  // row k = gradient of e_k
  for (Eigen::Index k = 1; k <= n; ++k) {
    Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(n * n);
    double sign = 1.0;
    for (Eigen::Index i = 1; i <= k; ++i) {
      acc += sign * (e(k - i) * dp.row(i - 1) + p(i - 1) * de.row(k - i));
      sign = -sign;
    }
    de.row(k) = acc / static_cast<double>(k);
  }

  JacobianReport report;
  report.base = a;
  report.matrix = de.bottomRows(n);
  report.tol = tol;
  Eigen::JacobiSVD<CMatrix> svd(report.matrix);
  report.singular_values = svd.singularValues();
  report.rank = 0;
  const double top = report.singular_values.size() ? report.singular_values(0) : 0.0;
  for (Eigen::Index i = 0; i < report.singular_values.size(); ++i)
    if (top > 0.0 && report.singular_values(i) > tol * top) ++report.rank;
  return report;
}

RankTheoremReport verify_rank_theorem(const CMatrix& a, double tol) {
  RankTheoremReport report;
  report.jacobian_rank = jacobian_c(a, tol).rank;
  const MinPolyResult mp = min_poly_degree(a, kResidualTol);
  report.minpoly_degree = mp.degree;
  report.minpoly_uncertain = mp.uncertain;
  report.holds = report.jacobian_rank == report.minpoly_degree;
  return report;
}

namespace {

// Block boundaries of a nilpotent Jordan-form matrix, detected from the
// superdiagonal 0/1 pattern. Returns the 1-based start index of each block.
std::vector<int> jordan_block_starts(const CMatrix& a, double tol) {
  const Eigen::Index n = a.rows();
  std::vector<int> starts{1};
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const Complex s = a(i, i + 1);
    if (std::abs(s) <= tol) {
      starts.push_back(static_cast<int>(i) + 2);
    } else if (std::abs(s - Complex(1.0)) > tol) {
      throw Error("nilpotent_kernel_probe: superdiagonal entries must be 0 or 1");
    }
  }
  return starts;
}

}  // namespace

KernelProbeReport nilpotent_kernel_probe(const CMatrix& a, int j, int k, double tol) {
  require_square(a, "nilpotent_kernel_probe");
  const Eigen::Index n = a.rows();
  if (j < 1 || j > n || k < 1 || k > n)
    throw Error("nilpotent_kernel_probe: index out of range");

  // Nilpotency check: ||A^n|| relative to ||A||^n scale.
  CMatrix power = CMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) power = power * a;
  const double scale = std::pow(std::max(1.0, a.norm()), static_cast<double>(n));
  if (power.norm() > tol * scale)
    throw Error("nilpotent_kernel_probe: matrix is not nilpotent");

  // Off-superdiagonal entries must vanish for Jordan form.
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (c != r + 1 && std::abs(a(r, c)) > tol)
        throw Error("nilpotent_kernel_probe: matrix is not in Jordan form");

  const auto starts = jordan_block_starts(a, tol);
  auto block_of = [&starts](int idx) {
    int b = 0;
    for (size_t i = 0; i < starts.size(); ++i)
      if (starts[i] <= idx) b = static_cast<int>(i);
    return b;
  };

  KernelProbeReport report;
  report.cross_block = block_of(j) != block_of(k);

  const JacobianReport jac = jacobian_c(a);
  const Eigen::Index column = (j - 1) + n * (k - 1);  // direction E_jk
  report.image_norm = jac.matrix.col(column).norm();
  const double jac_scale = std::max(1.0, jac.singular_values.size()
                                             ? jac.singular_values(0)
                                             : 0.0);
  report.annihilated = report.image_norm <= tol * jac_scale;
  return report;
}

}  // namespace spectral
