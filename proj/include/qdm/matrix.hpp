#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qdm {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotAntiHermitian : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct NegativeEigenvalue : Error {
  using Error::Error;
};

/// Default tolerances used across the library. All entry points accept an
/// explicit tolerance; these are only the defaults.
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPhysicalityTol = 1e-9;

double max_abs(const Matrix& a);
bool is_hermitian(const Matrix& a, double tol = kHermTol);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);

/// Spectral data of a Hermitian matrix. Eigenvalues are sorted descending;
/// eigenvector columns are orthonormal and H = U diag(w) U^*.
struct EigenDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
};

EigenDecomposition hermitian_eigen(const Matrix& h, double herm_tol = kHermTol);

double min_eigenvalue(const Matrix& h, double herm_tol = kHermTol);

Matrix kron(const Matrix& a, const Matrix& b);

enum class Subsystem { A, B };

/// Trace over the complementary factor of a dimA*dimB bipartite matrix.
Matrix partial_trace(const Matrix& rho, int dim_a, int dim_b, Subsystem keep);

/// Transpose one tensor factor of a dimA*dimB bipartite matrix.
Matrix partial_transpose(const Matrix& rho, int dim_a, int dim_b,
                         Subsystem which = Subsystem::B);

enum class HermFn { Sqrt, Cos, Sin, Exp };

/// Apply a scalar function to a Hermitian matrix through its spectrum.
Matrix herm_fn(const Matrix& h, HermFn f, double herm_tol = kHermTol);

/// Exponential of an anti-Hermitian matrix; the result is unitary.
Matrix expm_skew(const Matrix& x, double tol = kHermTol);

/// Repo-wide JSON matrix format: {"dim": n, "entries": [[[re,im],...],...]}.
std::string matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const std::string& text);

}  // namespace qdm
