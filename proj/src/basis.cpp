#include "qdm/basis.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "json.hpp"

namespace qdm {

std::string to_string(BasisOrdering o) {
  switch (o) {
    case BasisOrdering::Ggm:
      return "ggm";
    case BasisOrdering::PaperGellMann3:
      return "paper-gellmann3";
    case BasisOrdering::PauliTensor2Q:
      return "pauli-tensor-2q";
  }
  return "ggm";
}

BasisOrdering basis_ordering_from_string(const std::string& s) {
  if (s == "ggm") return BasisOrdering::Ggm;
  if (s == "paper-gellmann3") return BasisOrdering::PaperGellMann3;
  if (s == "pauli-tensor-2q") return BasisOrdering::PauliTensor2Q;
  throw BasisInvalid("unknown basis ordering: " + s);
}

void SymTensor3::set_canonical(int i, int j, int k, double v) {
  if (!(0 <= i && i <= j && j <= k && k < dim_))
    throw BasisInvalid("SymTensor3: canonical indices must satisfy 0 <= i <= j <= k < dim");
  canonical_.push_back({i, j, k, v});
  std::sort(canonical_.begin(), canonical_.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
}

namespace {
// Sign of the permutation sorting (i,j,k); 0 for antisymmetric repeated index.
int sort3(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  return sign;
}
}  // namespace

double SymTensor3::operator()(int i, int j, int k) const {
  int sign = sort3(i, j, k);
  if (antisymmetric_ && (i == j || j == k)) return 0.0;
  if (!antisymmetric_) sign = 1;
  Triplet key{i, j, k, 0.0};
  auto it = std::lower_bound(canonical_.begin(), canonical_.end(), key,
                             [](const Triplet& a, const Triplet& b) {
                               return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
                             });
  if (it == canonical_.end() || it->i != i || it->j != j || it->k != k) return 0.0;
  return sign * it->v;
}

std::vector<SymTensor3::Triplet> SymTensor3::expanded() const {
  std::vector<Triplet> out;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int signs[6] = {1, -1, -1, 1, 1, -1};
  for (const auto& t : canonical_) {
    const int idx[3] = {t.i, t.j, t.k};
    std::vector<std::tuple<int, int, int>> seen;
    for (int p = 0; p < 6; ++p) {
      int i = idx[perms[p][0]], j = idx[perms[p][1]], k = idx[perms[p][2]];
      auto tup = std::make_tuple(i, j, k);
      if (std::find(seen.begin(), seen.end(), tup) != seen.end()) continue;
      seen.push_back(tup);
      out.push_back({i, j, k, antisymmetric_ ? signs[p] * t.v : t.v});
    }
  }
  return out;
}

std::pair<SymTensor3, SymTensor3> structure_constants(const std::vector<Matrix>& generators,
                                                      double tol) {
  const int d = static_cast<int>(generators.size());
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      cxd ip = (generators[i].adjoint() * generators[j]).trace();
      double want = i == j ? 2.0 : 0.0;
      if (std::abs(ip - want) > 1e-10)
        throw BasisInvalid("structure_constants: generators not orthogonal with Tr = 2 delta");
    }
  SymTensor3 f(d, true), g(d, false);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Matrix comm = generators[i] * generators[j] - generators[j] * generators[i];
      Matrix anti = generators[i] * generators[j] + generators[j] * generators[i];
      for (int k = j; k < d; ++k) {
        // f_ijk = (1/4i) Tr([l_i,l_j] l_k), g_ijk = (1/4) Tr({l_i,l_j} l_k)
        double fv = ((comm * generators[k]).trace() / cxd(0, 4)).real();
        double gv = ((anti * generators[k]).trace() / 4.0).real();
        if (i < j && j < k && std::abs(fv) > 1e-13) f.set_canonical(i, j, k, fv);
        if (std::abs(gv) > 1e-13) g.set_canonical(i, j, k, gv);
      }
    }
  (void)tol;
  return {std::move(f), std::move(g)};
}

const Matrix& pauli(int i) {
  static const Matrix s1 = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  static const Matrix s2 = [] {
    Matrix m(2, 2);
    m << 0, cxd(0, -1), cxd(0, 1), 0;
    return m;
  }();
  static const Matrix s3 = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  switch (i) {
    case 1:
      return s1;
    case 2:
      return s2;
    case 3:
      return s3;
  }
  throw BasisInvalid("pauli: index must be 1, 2 or 3");
}

namespace {
BasisSet finish(int n, BasisOrdering ordering, std::vector<Matrix> gens) {
  BasisSet b;
  b.n = n;
  b.ordering = ordering;
  b.generators = std::move(gens);
  auto [f, g] = structure_constants(b.generators);
  b.f = std::move(f);
  b.g = std::move(g);
  return b;
}
}  // namespace

BasisSet ggm_basis(int n) {
  if (n < 2) throw BasisInvalid("ggm_basis: n must be >= 2");
  std::vector<Matrix> gens;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = 1;
      m(k, j) = 1;
      gens.push_back(m);
    }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = cxd(0, -1);
      m(k, j) = cxd(0, 1);
      gens.push_back(m);
    }
  for (int l = 1; l <= n - 1; ++l) {
    Matrix m = Matrix::Zero(n, n);
    double c = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = c;
    m(l, l) = -c * l;
    gens.push_back(m);
  }
  return finish(n, BasisOrdering::Ggm, std::move(gens));
}

BasisSet paper_gellmann3() {
  auto ggm = ggm_basis(3);
  // Same matrices as ggm_basis(3); only the relative order of symmetric /
  // antisymmetric / diagonal families differs (it does not, for n = 3, since
  // both list symmetric pairs first, antisymmetric second, diagonals last).
  std::vector<Matrix> gens;
  for (int i : paper3_to_ggm_permutation()) gens.push_back(ggm.generators[i]);
  return finish(3, BasisOrdering::PaperGellMann3, std::move(gens));
}

std::vector<int> paper3_to_ggm_permutation() {
  // paper lambda_1..3 = symmetric (12),(13),(23); lambda_4..6 = antisymmetric
  // same pairs; lambda_7 = diag(1,-1,0); lambda_8 = diag(1,1,-2)/sqrt3.
  return {0, 1, 2, 3, 4, 5, 6, 7};
}

BasisSet two_qubit_basis() {
  const Matrix id = Matrix::Identity(2, 2);
  const double c = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> gens;
  for (int i = 1; i <= 3; ++i) gens.push_back(c * kron(pauli(i), id));
  for (int i = 1; i <= 3; ++i) gens.push_back(c * kron(id, pauli(i)));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) gens.push_back(c * kron(pauli(i), pauli(j)));
  return finish(4, BasisOrdering::PauliTensor2Q, std::move(gens));
}

std::string BasisSet::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["ordering"] = qdm::to_string(ordering);
  auto gens = nlohmann::json::array();
  for (const auto& m : generators) gens.push_back(nlohmann::json::parse(matrix_to_json(m)));
  j["generators"] = std::move(gens);
  auto dump = [](const SymTensor3& t) {
    auto arr = nlohmann::json::array();
    for (const auto& e : t.canonical()) arr.push_back({e.i + 1, e.j + 1, e.k + 1, e.v});
    return arr;
  };
  j["f"] = dump(f);
  j["g"] = dump(g);
  return j.dump();
}

}  // namespace qdm
