#include <cmath>
#include <random>

#include "doctest.h"
#include "qdm/jarlskog.hpp"

using namespace qdm;

TEST_SUITE("jarlskog") {

TEST_CASE("v_matrix limiting cases") {
  ComplexVector z1(1);
  z1(0) = 1.0;
  CHECK(max_abs(v_matrix(2, 0.0, z1) - Matrix::Identity(2, 2)) < 1e-14);
  Matrix v = v_matrix(2, M_PI / 2.0, z1);
  Matrix expect(2, 2);
  expect << 0, 1, -1, 0;
  CHECK(max_abs(v - expect) < 1e-13);
  // General 2x2: [[c, s e^{i phi}], [-s e^{-i phi}, c]] for z = e^{i phi}.
  cxd ph = std::exp(cxd(0, 0.8));
  ComplexVector zp(1);
  zp(0) = ph;
  Matrix g = v_matrix(2, 0.3, zp);
  CHECK(std::abs(g(0, 0) - cxd(std::cos(0.3), 0)) < 1e-13);
  CHECK(std::abs(g(0, 1) - std::sin(0.3) * ph) < 1e-13);
  CHECK(std::abs(g(1, 0) + std::sin(0.3) * std::conj(ph)) < 1e-13);
  CHECK(std::abs(g(1, 1) - cxd(std::cos(0.3), 0)) < 1e-13);
  // Non-unit z is rejected.
  ComplexVector bad(1);
  bad(0) = 2.0;
  CHECK_THROWS_AS(v_matrix(2, 0.3, bad), NotUnitVector);
}

TEST_CASE("v_matrix is the exponential of the generating skew matrix") {
  // V = exp([[0, theta z], [-theta z^dag, 0]]) for a unit column z.
  std::mt19937_64 rng(83);
  std::normal_distribution<double> g;
  for (int j : {2, 3, 4, 5}) {
    ComplexVector z(j - 1);
    for (int i = 0; i < j - 1; ++i) z(i) = cxd(g(rng), g(rng));
    z /= z.norm();
    double theta = 1.1;
    Matrix x = Matrix::Zero(j, j);
    x.topRightCorner(j - 1, 1) = theta * z;
    x.bottomLeftCorner(1, j - 1) = -theta * z.adjoint();
    CHECK(max_abs(v_matrix(j, theta, z) - expm_skew(x)) < 1e-12);
  }
}

TEST_CASE("a_matrix embeds V in the top-left corner") {
  ComplexVector z(2);
  z << cxd(0.6, 0), cxd(0, 0.8);
  Matrix a = a_matrix(5, 3, 0.7, z);
  CHECK(max_abs(a.topLeftCorner(3, 3) - v_matrix(3, 0.7, z)) < 1e-14);
  CHECK(max_abs(a.bottomRightCorner(2, 2) - Matrix::Identity(2, 2)) < 1e-14);
  CHECK_THROWS_AS(a_matrix(3, 4, 0.1, z), IndexOutOfRange);
}

TEST_CASE("sampled parameters build special unitary matrices satisfying the recursion") {
  for (int n : {2, 3, 4, 5}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      JarlskogParams p = sample(n, seed);
      p.validate();
      Matrix u = su_from_params(p);
      CHECK(max_abs(u.adjoint() * u - Matrix::Identity(n, n)) < 1e-12);
      CHECK(std::abs(u.determinant() - cxd(1, 0)) < 1e-11);
      if (n > 2) {
        // U_n = blockdiag(U_{n-1}, 1) A_{n,n}.
        JarlskogParams lower = p;
        lower.n = n - 1;
        lower.eigenvalues = RealVector::Constant(n - 1, 1.0 / (n - 1));
        lower.levels.pop_back();
        lower.phases.reset();
        Matrix ulow = su_from_params(lower);
        Matrix big = Matrix::Identity(n, n);
        big.topLeftCorner(n - 1, n - 1) = ulow;
        Matrix a = a_matrix(n, n, p.levels.back().theta, p.levels.back().z);
        Matrix without_phases = su_from_params([&] {
          JarlskogParams q = p;
          q.phases.reset();
          return q;
        }());
        CHECK(max_abs(without_phases - big * a) < 1e-12);
      }
    }
  }
}

TEST_CASE("density_from_params has the prescribed spectrum and unit trace") {
  for (int n : {2, 3, 4, 5, 6}) {
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
      JarlskogParams p = sample(n, seed);
      Matrix rho = density_from_params(p);
      CHECK(std::abs(rho.trace() - cxd(1, 0)) < 1e-12);
      auto ed = hermitian_eigen(rho);
      for (int i = 0; i < n; ++i)
        CHECK(ed.eigenvalues(i) == doctest::Approx(p.eigenvalues(i)).epsilon(1e-10));
      CHECK(min_eigenvalue(rho) > -1e-12);
    }
  }
}

TEST_CASE("phases drop out of the density matrix") {
  JarlskogParams p = sample(4, 7);
  RealVector alpha(4);
  alpha << 0.3, -0.1, 0.5, -0.7;
  JarlskogParams q = p;
  q.phases = alpha;
  CHECK(max_abs(density_from_params(p) - density_from_params(q)) < 1e-12);
  // But they do change the unitary.
  CHECK(max_abs(su_from_params(p) - su_from_params(q)) > 1e-3);
}

TEST_CASE("recursive_embed agrees with the direct construction") {
  JarlskogParams p = sample(4, 21);
  p.phases.reset();
  // Unnormalized lower block: diag(l1, l2, l3) conjugated by the 3-dim product.
  Matrix u3 = a_matrix(3, 2, p.levels[0].theta, p.levels[0].z) *
              a_matrix(3, 3, p.levels[1].theta, p.levels[1].z);
  Matrix d3 = Matrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) d3(i, i) = p.eigenvalues(i);
  Matrix rho_low = u3.adjoint() * d3 * u3;
  Matrix rho =
      recursive_embed(rho_low, p.eigenvalues(3), p.levels[2].theta, p.levels[2].z);
  CHECK(max_abs(rho - density_from_params(p)) < 1e-11);
  // Mismatched trace budget is rejected.
  CHECK_THROWS_AS(
      recursive_embed(rho_low, 0.9, p.levels[2].theta, p.levels[2].z),
      TraceMismatch);
}

TEST_CASE("parameter extraction round trip") {
  for (int n : {2, 3, 4, 5}) {
    for (std::uint64_t seed = 40; seed < 60; ++seed) {
      JarlskogParams p = sample(n, seed);
      p.phases.reset();
      Matrix u = su_from_params(p);
      ExtractionResult e = extract_params(u);
      REQUIRE(e.levels.size() == p.levels.size());
      CHECK(e.canonical);
      for (size_t i = 0; i < e.levels.size(); ++i) {
        CHECK(e.levels[i].theta == doctest::Approx(p.levels[i].theta).epsilon(1e-9));
        CHECK((e.levels[i].z - p.levels[i].z).cwiseAbs().maxCoeff() < 1e-9);
      }
      // Reconstruction matches even when individual parameters are marginal.
      JarlskogParams q = p;
      q.levels = e.levels;
      CHECK(max_abs(su_from_params(q) - u) < 1e-10);
    }
  }
}

TEST_CASE("extraction flags the theta = 0 degeneracy") {
  JarlskogParams p = sample(3, 5);
  p.phases.reset();
  p.levels[1].theta = 0.0;
  Matrix u = su_from_params(p);
  ExtractionResult e = extract_params(u);
  CHECK_FALSE(e.canonical);
  JarlskogParams q = p;
  q.levels = e.levels;
  CHECK(max_abs(su_from_params(q) - u) < 1e-10);
}

TEST_CASE("sampler determinism and distribution constraints") {
  JarlskogParams a = sample(5, 12345);
  JarlskogParams b = sample(5, 12345);
  CHECK(a.to_json() == b.to_json());
  JarlskogParams c = sample(5, 12346);
  CHECK(a.to_json() != c.to_json());
  // By-value generator: the same engine state gives the same draw twice.
  std::mt19937_64 rng(99);
  JarlskogParams d1 = sample(4, rng);
  JarlskogParams d2 = sample(4, rng);
  CHECK(d1.to_json() == d2.to_json());
  // Eigenvalues sorted descending on the simplex.
  for (int i = 1; i < 5; ++i) CHECK(a.eigenvalues(i - 1) >= a.eigenvalues(i));
  CHECK(a.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& lv : a.levels) {
    CHECK(lv.theta >= 0.0);
    CHECK(lv.theta <= M_PI / 2.0);
    CHECK(lv.z.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("params JSON round trip and validation") {
  JarlskogParams p = sample(4, 3);
  JarlskogParams back = JarlskogParams::from_json(p.to_json());
  CHECK(back.n == p.n);
  CHECK((back.eigenvalues - p.eigenvalues).cwiseAbs().maxCoeff() < 1e-15);
  for (size_t i = 0; i < p.levels.size(); ++i) {
    CHECK(back.levels[i].theta == doctest::Approx(p.levels[i].theta));
    CHECK((back.levels[i].z - p.levels[i].z).cwiseAbs().maxCoeff() < 1e-15);
  }
  JarlskogParams bad = p;
  bad.eigenvalues(0) += 0.5;  // breaks the simplex constraint
  CHECK_THROWS_AS(bad.validate(), InvalidParams);
  bad = p;
  bad.levels[0].theta = 2.0;  // outside [0, pi/2]
  CHECK_THROWS_AS(bad.validate(), InvalidParams);
}

TEST_CASE("commutant structure of degenerate spectra") {
  RealVector lam(4);
  lam << 0.4, 0.4, 0.1, 0.1;
  CommutantStructure c = commutant_structure(lam);
  REQUIRE(c.multiplicities.size() == 2);
  CHECK(c.multiplicities[0].second == 2);
  CHECK(c.multiplicities[1].second == 2);
  CHECK(c.real_dimension == 7);  // 2^2 + 2^2 - 1
  RealVector pure(3);
  pure << 1.0, 0.0, 0.0;
  CommutantStructure cp = commutant_structure(pure);
  CHECK(cp.real_dimension == 4);  // 1 + 2^2 - 1
  RealVector mixed(3);
  mixed << 1.0 / 3, 1.0 / 3, 1.0 / 3;
  CHECK(commutant_structure(mixed).real_dimension == 8);  // full su(3)
  RealVector generic(3);
  generic << 0.5, 0.3, 0.2;
  CHECK(commutant_structure(generic).real_dimension == 2);  // maximal torus
}

}  // TEST_SUITE
