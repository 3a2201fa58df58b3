#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdm/bloch.hpp"

namespace qdm {

struct DegenerateAmplitudes : Error {
  using Error::Error;
};
struct NonPhysicalInitialState : Error {
  using Error::Error;
};
struct StepTooLarge : Error {
  using Error::Error;
};
struct ModelMismatch : Error {
  using Error::Error;
};

/// Hamiltonian in Bloch coordinates, H = (h0/n) I + (1/2) sum h_j lhat_j,
/// hbar = 1.
struct HamiltonianBloch {
  int n = 0;
  BasisOrdering basis = BasisOrdering::Ggm;
  double h0 = 0.0;
  RealVector h;
};

HamiltonianBloch hamiltonian_bloch(const Matrix& H, const BasisSet& basis,
                                   double tol = kHermTol);

/// dlambda_i/dt = sum_jk f_ijk h_j lambda_k.
BlochVector bloch_rhs(const HamiltonianBloch& h, const BlochVector& v, const BasisSet& basis);

/// Three-level atom driven by two lasers at exact two-photon resonance.
/// Rabi frequencies Omega_12 = 2 a Omega0(t), Omega_23 = 2 b Omega0(t).
struct ThreeLevelModel {
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;
  std::function<double(double)> omega0;

  double epsilon(double t) const;  // Omega0(t) sqrt(a^2 + b^2)
};

Matrix three_level_hamiltonian(const ThreeLevelModel& m, double t);

/// The 8x8 antisymmetric coupling matrix V with (dlambda/dt)^T = V lambda^T,
/// written in the paper_gellmann3 ordering.
Eigen::MatrixXd coupling_matrix(const ThreeLevelModel& m, double t);

/// Time-independent orthogonal basis change B with BVB^T block diagonal.
Eigen::MatrixXd basis_change_B(double a, double b);

struct BlockDecomposition {
  Eigen::MatrixXd v3;  // 3x3
  Eigen::MatrixXd v4;  // 4x4
  double v1 = 0.0;
};

BlockDecomposition block_decompose(const ThreeLevelModel& m, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<BlochVector> states;
  // Per-sample diagnostics: Tr rho^2, Tr rho^3.
  std::vector<double> tr2, tr3;

  std::string to_csv(const ThreeLevelModel* model = nullptr) const;
  std::string to_json(const ThreeLevelModel* model = nullptr) const;
};

/// Fixed-step classical RK4 for the Bloch equation under a time-dependent
/// Hamiltonian.
Trajectory integrate(const BlochVector& v0,
                     const std::function<HamiltonianBloch(double)>& h, const BasisSet& basis,
                     double T, double dt);

struct ConservedLengths {
  double l3 = 0.0, l4 = 0.0, l1 = 0.0;  // |Lambda_3|, |Lambda_4|, |Lambda_1|
};

ConservedLengths conserved_lengths(const BlochVector& v, const ThreeLevelModel& m);
std::vector<ConservedLengths> conserved_lengths(const Trajectory& traj,
                                                const ThreeLevelModel& m);

}  // namespace qdm
