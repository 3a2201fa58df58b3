#include "qdm/two_qubit.hpp"

#include <cmath>

namespace qdm {

namespace {
void require_two_qubit(const BlochVector& v) {
  if (v.n != 4 || v.basis != BasisOrdering::PauliTensor2Q || v.components.size() != 15)
    throw BasisMismatch("expected a 15-component pauli-tensor-2q Bloch vector");
}
}  // namespace

std::pair<Eigen::Vector3d, Eigen::Vector3d> reduced_states(const BlochVector& v) {
  require_two_qubit(v);
  // rho_A = I/2 + (1/sqrt2) sum lambda_i sigma_i = (I + r.sigma)/2 with
  // r = sqrt2 * lambda; report the conventional single-qubit Bloch vector r.
  const double s2 = std::sqrt(2.0);
  Eigen::Vector3d a = s2 * v.components.segment(0, 3);
  Eigen::Vector3d b = s2 * v.components.segment(3, 3);
  return {a, b};
}

BlochVector partial_transpose_bloch(const BlochVector& v) {
  require_two_qubit(v);
  BlochVector out = v;
  for (int i : {4, 7, 10, 13}) out.components(i) = -out.components(i);  // 0-based 5,8,11,14
  return out;
}

Matrix werner(double x) {
  Matrix w = Matrix::Zero(4, 4);
  w(0, 0) = w(3, 3) = (1 - x) / 4.0;
  w(1, 1) = w(2, 2) = (1 + x) / 4.0;
  w(1, 2) = w(2, 1) = -x / 2.0;
  return w;
}

Matrix werner_pt(double x) {
  Matrix w = Matrix::Zero(4, 4);
  w(0, 0) = w(3, 3) = (1 - x) / 4.0;
  w(1, 1) = w(2, 2) = (1 + x) / 4.0;
  w(0, 3) = w(3, 0) = -x / 2.0;
  return w;
}

bool ppt_positive(const Matrix& rho, int dim_a, int dim_b, double eps) {
  Matrix pt = partial_transpose(rho, dim_a, dim_b, Subsystem::B);
  return min_eigenvalue(pt) >= -eps;
}

Separability ppt_separable(const Matrix& rho, int dim_a, int dim_b, double eps) {
  const bool supported = (dim_a == 2 && dim_b == 2) || (dim_a == 2 && dim_b == 3);
  if (!supported)
    throw UnsupportedDims("ppt_separable: PPT is conclusive only for 2x2 and 2x3");
  if (!is_physical(rho, kPhysicalityTol)) throw NonPhysical("ppt_separable: state not physical");
  return ppt_positive(rho, dim_a, dim_b, eps) ? Separability::Separable
                                              : Separability::Entangled;
}

double bisect_threshold(const std::function<bool(double)>& pred_below, double lo, double hi,
                        double tol) {
  if (!pred_below(lo) || pred_below(hi))
    throw Error("bisect_threshold: predicate must hold at lo and fail at hi");
  while (hi - lo > tol) {
    double mid = (lo + hi) / 2.0;
    (pred_below(mid) ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

}  // namespace qdm
