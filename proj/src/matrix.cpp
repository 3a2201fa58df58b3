#include "qdm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "json.hpp"

namespace qdm {

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= tol;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

Matrix EigenDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<cxd>() *
         eigenvectors.adjoint();
}

EigenDecomposition hermitian_eigen(const Matrix& h, double herm_tol) {
  if (h.rows() != h.cols()) throw DimensionMismatch("hermitian_eigen: matrix not square");
  if (!is_hermitian(h, herm_tol)) throw NotHermitian("hermitian_eigen: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("hermitian_eigen: eigensolver did not converge");

  const int n = static_cast<int>(h.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const RealVector& w = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int i, int j) { return w(i) > w(j); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = w(order[k]);
    out.eigenvectors.col(k) = solver.eigenvectors().col(order[k]);
  }
  return out;
}

double min_eigenvalue(const Matrix& h, double herm_tol) {
  auto ed = hermitian_eigen(h, herm_tol);
  return ed.eigenvalues(ed.eigenvalues.size() - 1);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i)
    for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& rho, int dim_a, int dim_b, Subsystem keep) {
  if (rho.rows() != rho.cols() || rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
    throw DimensionMismatch("partial_trace: dim != dimA*dimB");
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k) out(i, j) += rho(i * dim_b + k, j * dim_b + k);
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k)
    for (int l = 0; l < dim_b; ++l)
      for (int i = 0; i < dim_a; ++i) out(k, l) += rho(i * dim_b + k, i * dim_b + l);
  return out;
}

Matrix partial_transpose(const Matrix& rho, int dim_a, int dim_b, Subsystem which) {
  if (rho.rows() != rho.cols() || rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
    throw DimensionMismatch("partial_transpose: dim != dimA*dimB");
  Matrix out(rho.rows(), rho.cols());
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l) {
          if (which == Subsystem::B)
            out(i * dim_b + k, j * dim_b + l) = rho(i * dim_b + l, j * dim_b + k);
          else
            out(i * dim_b + k, j * dim_b + l) = rho(j * dim_b + k, i * dim_b + l);
        }
  return out;
}

Matrix herm_fn(const Matrix& h, HermFn f, double herm_tol) {
  auto ed = hermitian_eigen(h, herm_tol);
  RealVector w = ed.eigenvalues;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    switch (f) {
      case HermFn::Sqrt:
        if (w(i) < -herm_tol)
          throw NegativeEigenvalue("herm_fn: sqrt of matrix with negative eigenvalue");
        w(i) = std::sqrt(std::max(0.0, w(i)));
        break;
      case HermFn::Cos:
        w(i) = std::cos(w(i));
        break;
      case HermFn::Sin:
        w(i) = std::sin(w(i));
        break;
      case HermFn::Exp:
        w(i) = std::exp(w(i));
        break;
    }
  }
  return ed.eigenvectors * w.asDiagonal().toDenseMatrix().cast<cxd>() *
         ed.eigenvectors.adjoint();
}

Matrix expm_skew(const Matrix& x, double tol) {
  if (x.rows() != x.cols()) throw DimensionMismatch("expm_skew: matrix not square");
  if (max_abs(x + x.adjoint()) > tol)
    throw NotAntiHermitian("expm_skew: input not anti-Hermitian");
  // iX is Hermitian; exp(X) = exp(-i (iX)).
  Matrix ix = cxd(0, 1) * x;
  Matrix h = (ix + ix.adjoint()) / 2.0;
  auto ed = hermitian_eigen(h, tol);
  ComplexVector phases(ed.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(cxd(0, -ed.eigenvalues(i)));
  return ed.eigenvectors * phases.asDiagonal() * ed.eigenvectors.adjoint();
}

std::string matrix_to_json(const Matrix& a) {
  nlohmann::json j;
  j["dim"] = a.rows();
  auto entries = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      row.push_back({a(i, k).real(), a(i, k).imag()});
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump();
}

Matrix matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw DimensionMismatch("matrix_from_json: dim must be positive");
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != n)
    throw DimensionMismatch("matrix_from_json: wrong row count");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = entries.at(i);
    if (static_cast<int>(row.size()) != n)
      throw DimensionMismatch("matrix_from_json: ragged row");
    for (int k = 0; k < n; ++k) {
      const auto& e = row.at(k);
      if (e.size() != 2) throw DimensionMismatch("matrix_from_json: entry is not [re,im]");
      out(i, k) = cxd(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return out;
}

}  // namespace qdm
