#pragma once

#include <string>
#include <vector>

#include "qdm/matrix.hpp"

namespace qdm {

struct BasisInvalid : Error {
  using Error::Error;
};
struct BasisMismatch : Error {
  using Error::Error;
};

enum class BasisOrdering { Ggm, PaperGellMann3, PauliTensor2Q };

std::string to_string(BasisOrdering o);
BasisOrdering basis_ordering_from_string(const std::string& s);

/// Sparse totally (anti)symmetric rank-3 tensor. Canonical entries are stored
/// with i <= j <= k; lookups reconstruct the rest by (anti)symmetry.
class SymTensor3 {
 public:
  SymTensor3() = default;
  SymTensor3(int dim, bool antisymmetric) : dim_(dim), antisymmetric_(antisymmetric) {}

  void set_canonical(int i, int j, int k, double v);
  double operator()(int i, int j, int k) const;
  int dim() const { return dim_; }
  bool antisymmetric() const { return antisymmetric_; }

  struct Triplet {
    int i, j, k;
    double v;
  };
  /// Canonical (i<=j<=k) nonzeros only.
  const std::vector<Triplet>& canonical() const { return canonical_; }
  /// All nonzero index permutations, signs applied.
  std::vector<Triplet> expanded() const;

 private:
  int dim_ = 0;
  bool antisymmetric_ = false;
  std::vector<Triplet> canonical_;  // sorted by (i,j,k)
};

/// Orthogonal generator basis of su(n): n^2-1 traceless Hermitian matrices
/// with Tr(g_i g_j) = 2 delta_ij, plus the structure constants f (antisymmetric)
/// and g (symmetric).
struct BasisSet {
  int n = 0;
  BasisOrdering ordering = BasisOrdering::Ggm;
  std::vector<Matrix> generators;
  SymTensor3 f;
  SymTensor3 g;

  int count() const { return static_cast<int>(generators.size()); }
  std::string to_json() const;
};

std::pair<SymTensor3, SymTensor3> structure_constants(const std::vector<Matrix>& generators,
                                                      double tol = 1e-12);

/// Generalized Gell-Mann basis: symmetric pairs (j<k lexicographic), then
/// antisymmetric pairs, then the n-1 diagonal generators.
BasisSet ggm_basis(int n);

/// The 3-level Gell-Mann basis in the ordering used for the three-level
/// dynamics: three symmetric, three antisymmetric, two diagonal generators.
BasisSet paper_gellmann3();

/// The SU(2)xSU(2) two-qubit basis (1/sqrt2){sigma_i x I, I x sigma_i,
/// sigma_i x sigma_j}, 15 generators.
BasisSet two_qubit_basis();

/// Index permutation p with paper_gellmann3()[i] == ggm_basis(3)[p[i]].
std::vector<int> paper3_to_ggm_permutation();

const Matrix& pauli(int i);  // i in 1..3

}  // namespace qdm
