#include <cmath>
#include <random>

#include "doctest.h"
#include "qdm/bloch.hpp"
#include "qdm/two_qubit.hpp"

using namespace qdm;

namespace {

BlochVector make_vec(const BasisSet& b, std::initializer_list<double> comps) {
  BlochVector v;
  v.n = b.n;
  v.basis = b.ordering;
  v.components = RealVector::Zero(b.count());
  int i = 0;
  for (double c : comps) v.components(i++) = c;
  return v;
}

BlochVector random_vec(const BasisSet& b, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  BlochVector v;
  v.n = b.n;
  v.basis = b.ordering;
  v.components = RealVector::Zero(b.count());
  for (int i = 0; i < b.count(); ++i) v.components(i) = u(rng);
  return v;
}

}  // namespace

TEST_SUITE("bloch") {

TEST_CASE("to_density / from_density on single-qubit poles") {
  BasisSet b = ggm_basis(2);
  // components (x, y, z) in the (sym, antisym, diag) = (sx, sy, sz) ordering
  Matrix up = to_density(make_vec(b, {0, 0, 1}), b);
  Matrix expect_up(2, 2);
  expect_up << 1, 0, 0, 0;
  CHECK(max_abs(up - expect_up) < 1e-14);

  Matrix plus = to_density(make_vec(b, {1, 0, 0}), b);
  Matrix expect_plus(2, 2);
  expect_plus << 0.5, 0.5, 0.5, 0.5;
  CHECK(max_abs(plus - expect_plus) < 1e-14);

  BlochVector back = from_density(expect_plus, b);
  CHECK(back.components(0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(back.components(1)) < 1e-13);
  CHECK(std::abs(back.components(2)) < 1e-13);
}

TEST_CASE("round trip density <-> Bloch for n = 3 and the two-qubit basis") {
  std::mt19937_64 rng(31);
  for (const BasisSet& b : {ggm_basis(3), two_qubit_basis(), paper_gellmann3()}) {
    for (int trial = 0; trial < 20; ++trial) {
      BlochVector v = random_vec(b, rng, 0.3);
      Matrix rho = to_density(v, b);
      CHECK(std::abs(rho.trace() - cxd(1, 0)) < 1e-13);
      BlochVector back = from_density(rho, b);
      CHECK((back.components - v.components).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("pure_qubit is a physical rank-1 projector") {
  Matrix p = pure_qubit(0.7, 1.3);
  CHECK(std::abs(p.trace() - cxd(1, 0)) < 1e-14);
  CHECK(max_abs(p * p - p) < 1e-13);
  CHECK(p(0, 0).real() == doctest::Approx(std::cos(0.7) * std::cos(0.7)));
}

TEST_CASE("closed-form coefficients at the maximally mixed point") {
  for (int n : {2, 3, 4}) {
    BasisSet b = ggm_basis(n);
    BlochVector zero;
    zero.n = n;
    zero.basis = b.ordering;
    zero.components = RealVector::Zero(b.count());
    CharCoeffs c = char_coeffs_closed(zero, b, std::min(n, 4));
    // rho = I/n: a_j = C(n, j) / n^j.
    CHECK(c.a(1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(c.a(2) == doctest::Approx((n - 1.0) / (2.0 * n)).epsilon(1e-13));
    if (n >= 3)
      CHECK(c.a(3) == doctest::Approx((n - 1.0) * (n - 2.0) / (6.0 * n * n)).epsilon(1e-13));
    if (n >= 4)
      CHECK(c.a(4) ==
            doctest::Approx((n - 1.0) * (n - 2.0) * (n - 3.0) / (24.0 * std::pow(n, 3)))
                .epsilon(1e-13));
  }
}

TEST_CASE("pure qubit has a2 = 0; |lambda| = 1 boundary") {
  BasisSet b = ggm_basis(2);
  BlochVector v = make_vec(b, {0.6, 0.0, 0.8});
  CharCoeffs c = char_coeffs_closed(v, b, 2);
  CHECK(std::abs(c.a(2)) < 1e-13);
}

TEST_CASE("closed coefficients match the Newton recursion on random states") {
  std::mt19937_64 rng(37);
  for (int n : {2, 3, 4}) {
    BasisSet b = ggm_basis(n);
    for (int trial = 0; trial < 30; ++trial) {
      BlochVector v = random_vec(b, rng, 0.4);
      Matrix rho = to_density(v, b);
      CharCoeffs closed = char_coeffs_closed(v, b, std::min(n, 4));
      CharCoeffs newton = char_coeffs_newton(rho);
      for (int j = 2; j <= std::min(n, 4); ++j)
        CHECK(closed.a(j) == doctest::Approx(newton.a(j)).epsilon(1e-10));
      // Newton coefficients equal elementary symmetric polynomials of the spectrum.
      auto ed = hermitian_eigen(rho);
      double e2 = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e2 += ed.eigenvalues(i) * ed.eigenvalues(j);
      CHECK(newton.a(2) == doctest::Approx(e2).epsilon(1e-9));
      CHECK(newton.a(n) ==
            doctest::Approx(ed.eigenvalues.prod()).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("explicit n = 3 a3 polynomial agrees with Newton") {
  std::mt19937_64 rng(41);
  BasisSet b = paper_gellmann3();
  for (int trial = 0; trial < 200; ++trial) {
    BlochVector v = random_vec(b, rng, 0.8);
    Matrix rho = to_density(v, b);
    CharCoeffs newton = char_coeffs_newton(rho);
    CHECK(a3_explicit_gellmann3(v.components) ==
          doctest::Approx(6.0 * newton.a(3)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("is_physical matches the spectral test on Werner states") {
  CharCoeffs c;
  CHECK(is_physical(werner(1.0), 1e-9, &c));
  CHECK(c.nonnegative(1e-9));
  CHECK(is_physical(werner(-1.0 / 3.0), 1e-9));
  CHECK_FALSE(is_physical(werner(1.01), 1e-9));
  CHECK_FALSE(is_physical(werner(-0.34), 1e-9));
}

TEST_CASE("trace invariants through the closed forms") {
  std::mt19937_64 rng(43);
  for (const BasisSet& b : {ggm_basis(3), two_qubit_basis()}) {
    for (int trial = 0; trial < 20; ++trial) {
      BlochVector v = random_vec(b, rng, 0.3);
      Matrix rho = to_density(v, b);
      for (int k = 2; k <= 4; ++k) {
        double direct = trace_invariant(rho, k);
        CHECK(trace_invariant(v, b, k) == doctest::Approx(direct).epsilon(1e-11));
      }
      // Tr rho^2 = 1/n + |lambda|^2 / 2.
      CHECK(trace_invariant(v, b, 2) ==
            doctest::Approx(1.0 / b.n + v.components.squaredNorm() / 2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("star product picks out the symmetric constants") {
  BasisSet b = two_qubit_basis();
  BlochVector e7 = make_vec(b, {});
  BlochVector e11 = make_vec(b, {});
  e7.components(6) = 1.0;
  e11.components(10) = 1.0;
  BlochVector s = star(e7, e11, b);
  CHECK(s.components(14) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
  // Only component 15 can be nonzero for this pair.
  for (int i = 0; i < 14; ++i) CHECK(std::abs(s.components(i)) < 1e-12);

  // star feeds Tr rho^3 = 1/n^2 + (3/2n)|l|^2 + (1/4) l . (l star l).
  std::mt19937_64 rng(47);
  BlochVector v = random_vec(b, rng, 0.3);
  BlochVector vv = star(v, v, b);
  double lhs = trace_invariant(to_density(v, b), 3);
  double rhs = 1.0 / 16.0 + 3.0 / 8.0 * v.components.squaredNorm() +
               0.25 * v.components.dot(vv.components);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
}

TEST_CASE("Bloch JSON round trip") {
  BasisSet b = paper_gellmann3();
  std::mt19937_64 rng(53);
  BlochVector v = random_vec(b, rng, 0.5);
  BlochVector back = BlochVector::from_json(v.to_json());
  CHECK(back.n == v.n);
  CHECK(back.basis == v.basis);
  CHECK((back.components - v.components).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("from_density rejects shapes that are not unit-trace Hermitian") {
  BasisSet b = ggm_basis(2);
  Matrix bad(2, 2);
  bad << 1, 1, 0, 1;  // not Hermitian
  CHECK_THROWS_AS(from_density(bad, b), NotDensityShape);
  CHECK_THROWS_AS(from_density(Matrix(2.0 * Matrix::Identity(2, 2)), b), NotDensityShape);
}

}  // TEST_SUITE
