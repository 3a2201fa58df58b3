#pragma once

#include <vector>

#include "qdm/jarlskog.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

struct BlockShapeMismatch : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};
struct NonPhysicalParameters : Error {
  using Error::Error;
};
struct InvalidSimplex : Error {
  using Error::Error;
};

/// Parameters of the block (n (x) m) recursive construction:
/// rho = A^{n*} ... A^{2*} D_n(Lambda_1|...|Lambda_n) A^2 ... A^n with
/// Lambda_k = U_k* D(eigenvalue segment k) U_k and A^j = exp(X_j) built from
/// the block column Z_j of j-1 m x m matrices.
struct CompositeParams {
  int n = 0, m = 0;
  RealVector eigenvalues;                      // nm values, simplex point
  std::vector<Matrix> local_unitaries;         // U_1..U_n, each m x m
  std::vector<std::vector<Matrix>> z_blocks;   // z_blocks[j-2] = (Z_{1,j}..Z_{j-1,j})

  void validate() const;
};

/// A^j = exp(X_j) with X_j carrying |Z_j> in block column j and -<Z_j| in
/// block row j; unitary, reduces to the scalar Jarlskog a_matrix at m = 1.
Matrix block_a(int n, int m, int j, const std::vector<Matrix>& z_blocks);

Matrix composite_density(const CompositeParams& p);

/// The 2 (x) m closed form: conjugation of the block-diagonal
/// D_2(Lambda_1|Lambda_2) by V = [[U C U*, U S], [-S U*, C]] with C = cos Xi,
/// S = sin Xi.
Matrix two_m_density(const Matrix& u, const Matrix& lambda1, const Matrix& lambda2,
                     const Matrix& xi, double tol = 1e-10);

/// Rank-1 projector family |psi><psi|, psi = sin(a)|00> + cos(a)|11>.
Matrix family_projector(double alpha);

/// Partially transposed Werner state W_pt(-p), -1/3 <= p <= 1.
Matrix family_werner_pt(double p);

/// Two-parameter mixture (1-p)/4 I_4 + p P(alpha); separable iff
/// p <= 1/(1 + 2 sin 2 alpha).
Matrix family_two_param(double p, double alpha);

/// Five-parameter circulant family from the 2x2-block construction with
/// Lambda_1 = diag(p2, p4), Lambda_2 = diag(p3, p1), Xi = diag(alpha, beta),
/// U = sigma_x.
Matrix family_five_param(double p1, double p2, double p3, double p4, double alpha,
                         double beta);

/// alpha = beta = pi/4 specialization of the five-parameter family.
Matrix bell_diag(double p1, double p2, double p3, double p4);

}  // namespace qdm
