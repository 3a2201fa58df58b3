#pragma once

#include <map>
#include <string>
#include <utility>

#include "qdm/bloch.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

struct InvalidAngularMomenta : Error {
  using Error::Error;
};
struct HermiticityViolation : Error {
  using Error::Error;
};

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m> in the Condon-Shortley
/// convention. Arguments are half-integers passed as doubles (e.g. 0.5, 1.5);
/// evaluated by the Racah sum with exact integer arithmetic.
double clebsch_gordan(double j1, double m1, double j2, double m2, double j, double m);

/// Spherical tensor operator basis T_LM, L = 0..n-1, M = -L..L, for spin
/// s = (n-1)/2. Orthonormal: Tr(T^dag T) = delta delta; T_00 = I/sqrt(n);
/// T_LM^dag = (-1)^M T_{L,-M}.
struct PolarizationBasis {
  int n = 0;
  std::map<std::pair<int, int>, Matrix> operators;  // key (L, M)

  const Matrix& at(int L, int M) const;
};

PolarizationBasis polarization_ops(int n);

/// Complex Bloch components lambda_LM = Tr(T_LM^dag rho), L >= 1. Hermiticity
/// of rho forces lambda_LM = (-1)^M conj(lambda_{L,-M}).
struct PolarizationBloch {
  int n = 0;
  std::map<std::pair<int, int>, cxd> components;

  double norm2() const;
  std::string to_json() const;
  static PolarizationBloch from_json(const std::string& text);
};

PolarizationBloch po_from_density(const Matrix& rho, const PolarizationBasis& basis,
                                  double tol = kHermTol);
Matrix po_to_density(const PolarizationBloch& v, const PolarizationBasis& basis);

bool po_physicality(const PolarizationBloch& v, const PolarizationBasis& basis, double eps,
                    CharCoeffs* coeffs = nullptr);

}  // namespace qdm
