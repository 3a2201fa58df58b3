#include "qdm/bloch.hpp"

#include <cmath>

#include "json.hpp"

namespace qdm {

std::string BlochVector::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["basis"] = qdm::to_string(basis);
  std::vector<double> c(components.data(), components.data() + components.size());
  j["components"] = c;
  return j.dump();
}

BlochVector BlochVector::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BlochVector v;
  v.n = j.at("n").get<int>();
  v.basis = basis_ordering_from_string(j.at("basis").get<std::string>());
  auto c = j.at("components").get<std::vector<double>>();
  if (static_cast<int>(c.size()) != v.n * v.n - 1)
    throw DimensionMismatch("BlochVector: components length must be n^2-1");
  v.components = Eigen::Map<const RealVector>(c.data(), c.size());
  return v;
}

bool CharCoeffs::nonnegative(double eps) const {
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if (a(j) < -eps) return false;
  return true;
}

namespace {
void check_match(const BlochVector& v, const BasisSet& basis) {
  if (v.n != basis.n || v.basis != basis.ordering ||
      v.components.size() != static_cast<Eigen::Index>(basis.count()))
    throw BasisMismatch("Bloch vector and basis disagree in n or ordering");
}
}  // namespace

Matrix to_density(const BlochVector& v, const BasisSet& basis) {
  check_match(v, basis);
  Matrix rho = Matrix::Identity(basis.n, basis.n) / static_cast<double>(basis.n);
  for (int j = 0; j < basis.count(); ++j) rho += 0.5 * v.components(j) * basis.generators[j];
  return rho;
}

BlochVector from_density(const Matrix& rho, const BasisSet& basis, double tol) {
  if (rho.rows() != basis.n || rho.cols() != basis.n)
    throw NotDensityShape("from_density: dimension mismatch with basis");
  if (!is_hermitian(rho, tol) || std::abs(rho.trace() - cxd(1, 0)) > tol)
    throw NotDensityShape("from_density: input is not Hermitian with unit trace");
  BlochVector v;
  v.n = basis.n;
  v.basis = basis.ordering;
  v.components.resize(basis.count());
  for (int j = 0; j < basis.count(); ++j)
    v.components(j) = (rho * basis.generators[j]).trace().real();
  return v;
}

Matrix pure_qubit(double theta, double phi) {
  double c = std::cos(theta), s = std::sin(theta);
  Matrix rho(2, 2);
  rho << c * c, c * s * std::exp(cxd(0, -phi)), c * s * std::exp(cxd(0, phi)), s * s;
  return rho;
}

BlochVector star(const BlochVector& a, const BlochVector& b, const BasisSet& basis) {
  check_match(a, basis);
  check_match(b, basis);
  BlochVector out;
  out.n = basis.n;
  out.basis = basis.ordering;
  out.components = RealVector::Zero(basis.count());
  for (const auto& t : basis.g.expanded())
    out.components(t.k) += t.v * a.components(t.i) * b.components(t.j);
  return out;
}

double a3_explicit_gellmann3(const RealVector& l) {
  if (l.size() != 8) throw DimensionMismatch("a3_explicit_gellmann3: need 8 components");
  double n2 = l.squaredNorm();
  double s3 = std::sqrt(3.0);
  // 1-based aliases in the (sym 12,13,23 | antisym 12,13,23 | diag) ordering:
  // l1..l3 symmetric, l4..l6 antisymmetric, l7 = diag(1,-1,0), l8 = diag/sqrt3.
  double l1 = l(0), l2 = l(1), l3 = l(2), l4 = l(3), l5 = l(4), l6 = l(5), l7 = l(6),
         l8 = l(7);
  return (1.0 / 36.0) *
         (8.0 - 18.0 * n2 + 27.0 * l7 * (l2 * l2 + l5 * l5 - l3 * l3 - l6 * l6) -
          6.0 * s3 * l8 * l8 * l8 +
          9.0 * s3 * l8 *
              (2.0 * (l1 * l1 + l4 * l4 + l7 * l7) - (l2 * l2 + l3 * l3 + l5 * l5 + l6 * l6)) +
          54.0 * (l1 * l2 * l3 + l1 * l5 * l6 + l3 * l4 * l5 - l2 * l4 * l6));
}

CharCoeffs char_coeffs_closed(const BlochVector& v, const BasisSet& basis, int jmax) {
  check_match(v, basis);
  if (jmax < 1 || jmax > 4)
    throw DimensionMismatch("char_coeffs_closed: jmax must be in 1..4");
  const double n = basis.n;
  const double norm2 = v.components.squaredNorm();
  BlochVector vv = star(v, v, basis);
  const double lgl = v.components.dot(vv.components);     // sum g_ijk l_i l_j l_k
  const double gg = vv.components.squaredNorm();          // sum (l (.) l)_k^2
  CharCoeffs out;
  out.a.resize(jmax + 1);
  out.a(0) = 1.0;
  out.a(1) = 1.0;
  if (jmax >= 2) out.a(2) = ((n - 1) / n - 0.5 * norm2) / 2.0;
  if (jmax >= 3)
    out.a(3) = ((n - 1) * (n - 2) / (n * n) - 3.0 * (n - 2) / (2.0 * n) * norm2 + 0.5 * lgl) /
               6.0;
  if (jmax >= 4)
    out.a(4) = ((n - 1) * (n - 2) * (n - 3) / (n * n * n) -
                3.0 * (n - 2) * (n - 3) / (n * n) * norm2 +
                3.0 * (n - 2) / (4.0 * n) * norm2 * norm2 + 2.0 * (n - 3) / n * lgl -
                0.75 * gg) /
               24.0;
  return out;
}

CharCoeffs char_coeffs_newton(const Matrix& rho, double tol) {
  if (!is_hermitian(rho, tol)) throw NotHermitian("char_coeffs_newton: input not Hermitian");
  const int n = static_cast<int>(rho.rows());
  std::vector<double> p(n + 1, 0.0);  // p[m] = Tr(rho^m)
  Matrix power = Matrix::Identity(n, n);
  for (int m = 1; m <= n; ++m) {
    power = power * rho;
    p[m] = power.trace().real();
  }
  CharCoeffs out;
  out.a.resize(n + 1);
  out.a(0) = 1.0;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int m = 1; m <= k; ++m) s += (m % 2 == 1 ? 1.0 : -1.0) * out.a(k - m) * p[m];
    out.a(k) = s / k;
  }
  return out;
}

bool is_physical(const Matrix& rho, double eps, CharCoeffs* coeffs) {
  CharCoeffs c = char_coeffs_newton(rho);
  if (coeffs) *coeffs = c;
  return c.nonnegative(eps);
}

bool is_physical(const BlochVector& v, const BasisSet& basis, double eps, CharCoeffs* coeffs) {
  return is_physical(to_density(v, basis), eps, coeffs);
}

double trace_invariant(const Matrix& rho, int k) {
  if (k < 1) throw DimensionMismatch("trace_invariant: k must be >= 1");
  Matrix power = Matrix::Identity(rho.rows(), rho.cols());
  for (int m = 0; m < k; ++m) power = power * rho;
  return power.trace().real();
}

double trace_invariant(const BlochVector& v, const BasisSet& basis, int k) {
  check_match(v, basis);
  if (k < 1) throw DimensionMismatch("trace_invariant: k must be >= 1");
  const double n = basis.n;
  const double norm2 = v.components.squaredNorm();
  switch (k) {
    case 1:
      return 1.0;
    case 2:
      return 1.0 / n + 0.5 * norm2;
    case 3: {
      BlochVector vv = star(v, v, basis);
      return 1.0 / (n * n) + 3.0 / (2.0 * n) * norm2 + 0.25 * v.components.dot(vv.components);
    }
    case 4: {
      BlochVector vv = star(v, v, basis);
      double lgl = v.components.dot(vv.components);
      return 1.0 / (n * n * n) + 3.0 / (n * n) * norm2 + lgl / n +
             norm2 * norm2 / (4.0 * n) + 0.125 * vv.components.squaredNorm();
    }
    default:
      return trace_invariant(to_density(v, basis), k);
  }
}

}  // namespace qdm
