#include "qdm/composite.hpp"

#include <cmath>

namespace qdm {

void CompositeParams::validate() const {
  if (n < 2 || m < 1) throw InvalidParams("CompositeParams: need n >= 2, m >= 1");
  if (eigenvalues.size() != static_cast<Eigen::Index>(n) * m)
    throw InvalidParams("CompositeParams: need n*m eigenvalues");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues(i) < -1e-12) throw InvalidParams("CompositeParams: negative eigenvalue");
    sum += eigenvalues(i);
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidParams("CompositeParams: eigenvalues must sum to 1");
  if (static_cast<int>(local_unitaries.size()) != n)
    throw InvalidParams("CompositeParams: need n local unitaries");
  for (const auto& u : local_unitaries) {
    if (u.rows() != m || u.cols() != m)
      throw BlockShapeMismatch("CompositeParams: local unitaries must be m x m");
    if (max_abs(u.adjoint() * u - Matrix::Identity(m, m)) > 1e-10)
      throw InvalidParams("CompositeParams: local unitary is not unitary");
  }
  if (static_cast<int>(z_blocks.size()) != n - 1)
    throw InvalidParams("CompositeParams: need n-1 block columns (j = 2..n)");
  for (int j = 2; j <= n; ++j) {
    const auto& col = z_blocks[j - 2];
    if (static_cast<int>(col.size()) != j - 1)
      throw BlockShapeMismatch("CompositeParams: Z_j must have j-1 blocks");
    for (const auto& z : col)
      if (z.rows() != m || z.cols() != m)
        throw BlockShapeMismatch("CompositeParams: Z blocks must be m x m");
  }
}

Matrix block_a(int n, int m, int j, const std::vector<Matrix>& z_blocks) {
  if (j < 2 || j > n) throw IndexOutOfRange("block_a: need 2 <= j <= n");
  if (static_cast<int>(z_blocks.size()) != j - 1)
    throw BlockShapeMismatch("block_a: Z_j must have j-1 blocks");
  Matrix x = Matrix::Zero(n * m, n * m);
  for (int i = 0; i < j - 1; ++i) {
    const Matrix& z = z_blocks[i];
    if (z.rows() != m || z.cols() != m)
      throw BlockShapeMismatch("block_a: Z blocks must be m x m");
    x.block(i * m, (j - 1) * m, m, m) = z;
    x.block((j - 1) * m, i * m, m, m) = -z.adjoint();
  }
  return expm_skew(x);
}

Matrix composite_density(const CompositeParams& p) {
  p.validate();
  const int dim = p.n * p.m;
  Matrix dblk = Matrix::Zero(dim, dim);
  for (int k = 0; k < p.n; ++k) {
    Matrix d = Matrix::Zero(p.m, p.m);
    for (int i = 0; i < p.m; ++i) d(i, i) = p.eigenvalues(k * p.m + i);
    dblk.block(k * p.m, k * p.m, p.m, p.m) =
        p.local_unitaries[k].adjoint() * d * p.local_unitaries[k];
  }
  Matrix rho = dblk;
  for (int j = 2; j <= p.n; ++j) {
    Matrix a = block_a(p.n, p.m, j, p.z_blocks[j - 2]);
    rho = a.adjoint() * rho * a;
  }
  return rho;
}

Matrix two_m_density(const Matrix& u, const Matrix& lambda1, const Matrix& lambda2,
                     const Matrix& xi, double tol) {
  const int m = static_cast<int>(u.rows());
  if (u.cols() != m || lambda1.rows() != m || lambda1.cols() != m || lambda2.rows() != m ||
      lambda2.cols() != m || xi.rows() != m || xi.cols() != m)
    throw DimensionMismatch("two_m_density: all inputs must be m x m");
  if (std::abs(lambda1.trace() + lambda2.trace() - cxd(1, 0)) > tol)
    throw TraceMismatch("two_m_density: Tr Lambda1 + Tr Lambda2 must be 1");
  Matrix c = herm_fn(xi, HermFn::Cos, tol);
  Matrix s = herm_fn(xi, HermFn::Sin, tol);
  Matrix l1u = u.adjoint() * lambda1 * u;
  Matrix mid(2 * m, 2 * m);
  mid.topLeftCorner(m, m) = c * l1u * c + s * lambda2 * s;
  mid.topRightCorner(m, m) = s * lambda2 * c - c * l1u * s;
  mid.bottomLeftCorner(m, m) = c * lambda2 * s - s * l1u * c;
  mid.bottomRightCorner(m, m) = c * lambda2 * c + s * l1u * s;
  Matrix outer = Matrix::Identity(2 * m, 2 * m);
  outer.topLeftCorner(m, m) = u;
  return outer.adjoint() * mid * outer;
}

Matrix family_projector(double alpha) {
  ComplexVector psi = ComplexVector::Zero(4);
  psi(0) = std::sin(alpha);
  psi(3) = std::cos(alpha);
  return psi * psi.adjoint();
}

namespace {
Matrix sigma_x2() {
  Matrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}
}  // namespace

Matrix family_werner_pt(double p) {
  if (p < -1.0 / 3.0 - 1e-12 || p > 1.0 + 1e-12)
    throw OutOfRange("family_werner_pt: need -1/3 <= p <= 1");
  Matrix l1 = (1.0 - p) / 4.0 * Matrix::Identity(2, 2);
  Matrix l2 = Matrix::Zero(2, 2);
  l2(0, 0) = (1.0 - p) / 4.0;
  l2(1, 1) = (1.0 + 3.0 * p) / 4.0;
  Matrix xi = M_PI / 4.0 * Matrix::Identity(2, 2);  // S = C = I/sqrt2
  return two_m_density(sigma_x2(), l1, l2, xi);
}

Matrix family_two_param(double p, double alpha) {
  Matrix rho = (1.0 - p) / 4.0 * Matrix::Identity(4, 4) + p * family_projector(alpha);
  if (min_eigenvalue(rho) < -kPhysicalityTol)
    throw NonPhysicalParameters("family_two_param: parameters yield a non-positive state");
  return rho;
}

Matrix family_five_param(double p1, double p2, double p3, double p4, double alpha,
                         double beta) {
  const double sum = p1 + p2 + p3 + p4;
  if (p1 < -1e-12 || p2 < -1e-12 || p3 < -1e-12 || p4 < -1e-12 ||
      std::abs(sum - 1.0) > 1e-9)
    throw InvalidSimplex("family_five_param: need p_i >= 0 summing to 1");
  if (alpha < -1e-12 || alpha > M_PI / 2 + 1e-12 || beta < -1e-12 || beta > M_PI / 2 + 1e-12)
    throw OutOfRange("family_five_param: angles must be in [0, pi/2]");
  Matrix l1 = Matrix::Zero(2, 2), l2 = Matrix::Zero(2, 2), xi = Matrix::Zero(2, 2);
  l1(0, 0) = p2;
  l1(1, 1) = p4;
  l2(0, 0) = p3;
  l2(1, 1) = p1;
  xi(0, 0) = alpha;
  xi(1, 1) = beta;
  return two_m_density(sigma_x2(), l1, l2, xi);
}

Matrix bell_diag(double p1, double p2, double p3, double p4) {
  return family_five_param(p1, p2, p3, p4, M_PI / 4.0, M_PI / 4.0);
}

}  // namespace qdm
