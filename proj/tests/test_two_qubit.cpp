#include <cmath>
#include <random>

#include "doctest.h"
#include "qdm/two_qubit.hpp"

using namespace qdm;

TEST_SUITE("two_qubit") {

TEST_CASE("reduced states of product and Werner states") {
  BasisSet b = two_qubit_basis();
  // Product state (I/2 + rz sz/2) (x) (I/2 + rx sx/2).
  Matrix rho_a = 0.5 * (Matrix::Identity(2, 2) + 0.6 * pauli(3));
  Matrix rho_b = 0.5 * (Matrix::Identity(2, 2) + 0.4 * pauli(1));
  BlochVector v = from_density(kron(rho_a, rho_b), b);
  auto [ra, rb] = reduced_states(v);
  CHECK(ra.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ra.z() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(rb.x() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(rb.z() == doctest::Approx(0.0).epsilon(1e-12));
  // Consistency with the partial trace.
  Matrix ta = partial_trace(kron(rho_a, rho_b), 2, 2, Subsystem::A);
  for (int i = 1; i <= 3; ++i)
    CHECK(ra(i - 1) == doctest::Approx(((pauli(i) * ta).trace()).real()).epsilon(1e-12));

  // Werner states have maximally mixed marginals.
  BlochVector w = from_density(werner(0.7), b);
  auto [wa, wb] = reduced_states(w);
  CHECK(wa.norm() < 1e-12);
  CHECK(wb.norm() < 1e-12);
}

TEST_CASE("partial transpose as a component sign map") {
  BasisSet b = two_qubit_basis();
  std::mt19937_64 rng(73);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    BlochVector v;
    v.n = 4;
    v.basis = b.ordering;
    v.components = RealVector::Zero(15);
    for (int i = 0; i < 15; ++i) v.components(i) = 0.2 * g(rng);
    BlochVector vt = partial_transpose_bloch(v);
    // Involution.
    BlochVector vtt = partial_transpose_bloch(vt);
    CHECK((vtt.components - v.components).cwiseAbs().maxCoeff() < 1e-15);
    // Negated components 5, 8, 11, 14 (1-based), all others fixed.
    for (int i = 0; i < 15; ++i) {
      double sign = (i == 4 || i == 7 || i == 10 || i == 13) ? -1.0 : 1.0;
      CHECK(vt.components(i) == doctest::Approx(sign * v.components(i)));
    }
    // Matrix-level agreement with the tensor-factor transpose.
    Matrix rho = to_density(v, b);
    CHECK(max_abs(to_density(vt, b) - partial_transpose(rho, 2, 2, Subsystem::B)) < 1e-12);
  }
}

TEST_CASE("Werner matrices at the endpoints") {
  Matrix w0 = werner(0.0);
  CHECK(max_abs(w0 - 0.25 * Matrix::Identity(4, 4)) < 1e-14);
  // x = 1 is the singlet projector: eigenvalues (1, 0, 0, 0).
  auto ed = hermitian_eigen(werner(1.0));
  CHECK(ed.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-13));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(ed.eigenvalues(i)) < 1e-13);
  // Explicit entries at x = 1/2.
  Matrix w = werner(0.5);
  CHECK(w(0, 0).real() == doctest::Approx(0.125));
  CHECK(w(1, 1).real() == doctest::Approx(0.375));
  CHECK(w(1, 2).real() == doctest::Approx(-0.25));
  CHECK(w(3, 3).real() == doctest::Approx(0.125));
  // werner_pt is the partial transpose of werner.
  CHECK(max_abs(werner_pt(0.5) - partial_transpose(w, 2, 2, Subsystem::B)) < 1e-14);
}

TEST_CASE("Werner characteristic polynomials in closed form") {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(-1.0 / 3.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    double x = u(rng);
    CharCoeffs c = char_coeffs_newton(werner(x));
    CHECK(2.0 * c.a(2) == doctest::Approx(0.75 * (1 - x * x)).epsilon(1e-12).scale(1.0));
    CHECK(6.0 * c.a(3) ==
          doctest::Approx(3.0 / 8.0 * (1 - 3 * x * x + 2 * x * x * x))
              .epsilon(1e-12)
              .scale(1.0));
    CHECK(24.0 * c.a(4) ==
          doctest::Approx(3.0 / 32.0 *
                          (1 - 6 * x * x + 8 * x * x * x - 3 * x * x * x * x))
              .epsilon(1e-12)
              .scale(1.0));
    // Partial transpose flips the sign of the odd cubic terms.
    CharCoeffs cpt = char_coeffs_newton(werner_pt(x));
    CHECK(6.0 * cpt.a(3) ==
          doctest::Approx(3.0 / 8.0 * (1 - 3 * x * x - 2 * x * x * x))
              .epsilon(1e-12)
              .scale(1.0));
    CHECK(24.0 * cpt.a(4) ==
          doctest::Approx(3.0 / 32.0 *
                          (1 - 6 * x * x - 8 * x * x * x - 3 * x * x * x * x))
              .epsilon(1e-12)
              .scale(1.0));
  }
}

TEST_CASE("PPT verdicts for Werner and product states") {
  CHECK(ppt_separable(werner(0.2), 2, 2) == Separability::Separable);
  CHECK(ppt_separable(werner(1.0 / 3.0 - 1e-6), 2, 2) == Separability::Separable);
  CHECK(ppt_separable(werner(1.0 / 3.0 + 1e-6), 2, 2) == Separability::Entangled);
  CHECK(ppt_separable(werner(1.0), 2, 2) == Separability::Entangled);
  // Product states are separable; also exercise 2x3.
  Matrix rho_a = 0.5 * (Matrix::Identity(2, 2) + 0.3 * pauli(1));
  Matrix rho_b = Matrix::Zero(3, 3);
  rho_b(0, 0) = 0.5;
  rho_b(1, 1) = 0.3;
  rho_b(2, 2) = 0.2;
  CHECK(ppt_separable(kron(rho_a, rho_b), 2, 3) == Separability::Separable);
  CHECK(ppt_positive(kron(rho_a, rho_b), 2, 3));
  // 3x3 is inconclusive for the decision routine.
  Matrix mm9 = Matrix::Identity(9, 9) / 9.0;
  CHECK_THROWS_AS(ppt_separable(mm9, 3, 3), UnsupportedDims);
  CHECK(ppt_positive(mm9, 3, 3));
  // Non-physical input is rejected.
  CHECK_THROWS_AS(ppt_separable(werner(1.2), 2, 2), NonPhysical);
}

TEST_CASE("bisection locates the Werner separability threshold") {
  auto separable = [](double x) {
    return ppt_separable(werner(x), 2, 2) == Separability::Separable;
  };
  double xc = bisect_threshold(separable, 0.0, 1.0, 1e-10);
  CHECK(xc == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
  CHECK_THROWS(bisect_threshold(separable, 0.9, 1.0, 1e-10));
}

}  // TEST_SUITE
