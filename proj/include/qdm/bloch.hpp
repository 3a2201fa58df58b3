#pragma once

#include <string>

#include "qdm/basis.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

struct NotDensityShape : Error {
  using Error::Error;
};

/// Real expansion coefficients of a state in a generator basis,
/// rho = I/n + (1/2) sum lambda_j lhat_j. Values outside the physical set are
/// representable; is_physical gates them.
struct BlochVector {
  int n = 0;
  BasisOrdering basis = BasisOrdering::Ggm;
  RealVector components;

  std::string to_json() const;
  static BlochVector from_json(const std::string& text);
};

/// Signed characteristic-polynomial coefficients, det(xI - rho) =
/// sum (-1)^j a_j x^{n-j}; a[0] = 1 and all a_j >= 0 iff rho >= 0.
struct CharCoeffs {
  RealVector a;

  bool nonnegative(double eps) const;
};

Matrix to_density(const BlochVector& v, const BasisSet& basis);
BlochVector from_density(const Matrix& rho, const BasisSet& basis, double tol = kHermTol);

/// Rank-1 projector [[c^2, cs e^{-i phi}],[cs e^{i phi}, s^2]], c = cos(theta).
Matrix pure_qubit(double theta, double phi);

/// a_1..a_jmax (jmax <= 4) from the closed Bloch-vector polynomials; for n = 3
/// a_3 additionally matches the explicit Gell-Mann expansion.
CharCoeffs char_coeffs_closed(const BlochVector& v, const BasisSet& basis, int jmax = 4);

/// All a_0..a_n via the Newton-identity recursion on Tr(rho^k).
CharCoeffs char_coeffs_newton(const Matrix& rho, double tol = kHermTol);

bool is_physical(const Matrix& rho, double eps, CharCoeffs* coeffs = nullptr);
bool is_physical(const BlochVector& v, const BasisSet& basis, double eps,
                 CharCoeffs* coeffs = nullptr);

/// Tr(rho^k); for k <= 4 evaluated through the Bloch closed forms.
double trace_invariant(const BlochVector& v, const BasisSet& basis, int k);
double trace_invariant(const Matrix& rho, int k);

/// (a (.) b)_k = sum_ij g_ijk a_i b_j.
BlochVector star(const BlochVector& a, const BlochVector& b, const BasisSet& basis);

/// The explicit n=3 Gell-Mann a3 polynomial (corrected closed form); returns 3! a3.
double a3_explicit_gellmann3(const RealVector& lambda);

}  // namespace qdm
