#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qdm/matrix.hpp"

namespace qdm {

struct NotUnitVector : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct InvalidParams : Error {
  using Error::Error;
};
struct TraceMismatch : Error {
  using Error::Error;
};

/// One recursion level: angle theta_j in [0, pi/2] and unit vector
/// z_j in C^{j-1}.
struct JarlskogLevel {
  double theta = 0.0;
  ComplexVector z;
};

/// Parameters of the recursive SU(n) factorization and of the density matrix
/// rho = A_{n,n}* ... A_{n,2}* D(lambda) A_{n,2} ... A_{n,n}.
struct JarlskogParams {
  int n = 0;
  RealVector eigenvalues;             // sorted descending, nonnegative, sum 1
  std::vector<JarlskogLevel> levels;  // levels[j-2] holds (theta_j, z_j), j = 2..n
  std::optional<RealVector> phases;   // alpha_1..alpha_n, sum 0

  void validate() const;
  std::string to_json() const;
  static JarlskogParams from_json(const std::string& text);
};

/// The j x j unitary V with blocks I - (1-c)|z><z|, s|z>; -s<z|, c.
Matrix v_matrix(int j, double theta, const ComplexVector& z);

/// blockdiag(V_{n,j}, I_{n-j}).
Matrix a_matrix(int n, int j, double theta, const ComplexVector& z);

Matrix phase_matrix(const RealVector& alpha);

/// U_n = A_{n,2} A_{n,3} ... A_{n,n} (times the phase factor if present).
Matrix su_from_params(const JarlskogParams& p);

Matrix density_from_params(const JarlskogParams& p);

/// A_{n,n}* blockdiag(rho_low, lambda_new) A_{n,n}.
Matrix recursive_embed(const Matrix& rho_low, double lambda_new, double theta,
                       const ComplexVector& z, double tol = 1e-10);

/// Seeded product-measure sampler: simplex-uniform sorted eigenvalues, theta_j
/// uniform on [0, pi/2], z_j normalized complex Gaussian. The generator is
/// taken by value: a given generator state always yields the same draw.
JarlskogParams sample(int n, std::mt19937_64 rng);
JarlskogParams sample(int n, std::uint64_t seed);

struct ExtractionResult {
  std::vector<JarlskogLevel> levels;
  bool canonical = true;  // false when some theta_j = 0 made z_j unidentifiable
};

/// Inverse of su_from_params (phase-free case): peel (theta_n, z_n) from the
/// last row, then recurse.
ExtractionResult extract_params(const Matrix& u, double tol = 1e-10);

struct CommutantStructure {
  std::vector<std::pair<double, int>> multiplicities;  // (eigenvalue, m_j)
  std::vector<int> block_sizes;
  int real_dimension = 0;  // sum m_j^2 - 1
};

CommutantStructure commutant_structure(const RealVector& eigenvalues,
                                       double degeneracy_tol = 1e-10);

}  // namespace qdm
