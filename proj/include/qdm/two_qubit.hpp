#pragma once

#include <functional>
#include <utility>

#include "qdm/bloch.hpp"
#include "qdm/matrix.hpp"

namespace qdm {

struct NonPhysical : Error {
  using Error::Error;
};
struct UnsupportedDims : Error {
  using Error::Error;
};

/// Single-qubit Bloch vectors of the two reduced states; for a state with
/// two-qubit components lambda, rho_A = I/2 + (1/sqrt2) sum lambda_i sigma_i
/// and rho_B uses components 4-6.
std::pair<Eigen::Vector3d, Eigen::Vector3d> reduced_states(const BlochVector& v);

/// Partial transpose of the second qubit as a sign map: negates components
/// 5, 8, 11, 14 (1-based).
BlochVector partial_transpose_bloch(const BlochVector& v);

Matrix werner(double x);
Matrix werner_pt(double x);

enum class Separability { Separable, Entangled };

/// Peres-Horodecki verdict; conclusive only for 2x2 and 2x3.
Separability ppt_separable(const Matrix& rho, int dim_a, int dim_b, double eps = 1e-9);

/// PPT as a necessary condition only; any dims.
bool ppt_positive(const Matrix& rho, int dim_a, int dim_b, double eps = 1e-9);

/// Largest x in [lo, hi] (resp. smallest) where predicate flips; generic
/// bisection helper for threshold location.
double bisect_threshold(const std::function<bool(double)>& pred_below, double lo, double hi,
                        double tol = 1e-9);

}  // namespace qdm
