#pragma once

// Simplicial homology over GF(p), maps induced by inclusions, and the
// persistence modules of graph filtrations.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpers/gmodule.hpp"
#include "qpers/linalg.hpp"
#include "qpers/quiver.hpp"

namespace qpers {

/// Vertex labels sorted ascending.
using Simplex = std::vector<std::string>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure under faces of the given simplices; labels within a simplex
  /// are sorted and deduplicated.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  /// Highest simplex dimension, -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  /// k-simplices in lexicographic order; column k of the chain complex.
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const noexcept { return index_.size(); }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  bool is_subcomplex_of(const SimplicialComplex& other) const;

  /// All simplices, lowest dimension first.
  std::vector<Simplex> all() const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, std::size_t> index_;
};

/// Matrix of the boundary C_k -> C_{k-1}: column j holds the signed faces
/// of the j-th k-simplex, the i-th face carrying (-1)^i. ∂_0 has no rows.
Matrix boundary_matrix(const PrimeField& f, const SimplicialComplex& x, int k);

struct HomologyBasis {
  int k = 0;
  Subspace cycle_basis = Subspace::zero(0);     ///< Z_k inside C_k
  Subspace boundary_basis = Subspace::zero(0);  ///< B_k inside C_k
  QuotientSpace quotient;                       ///< Z_k / B_k in Z_k coordinates
  Eigen::Index dim() const noexcept { return quotient.dim(); }

  /// Homology class of a k-cycle, in quotient coordinates.
  Vector class_of(const PrimeField& f, const Vector& cycle) const;
  /// Columns are cycles representing the basis classes (|C_k| x dim()).
  Matrix representatives(const PrimeField& f) const;
};

HomologyBasis homology(const PrimeField& f, const SimplicialComplex& x, int k);

/// Matrix of H_k(x) -> H_k(y) induced by the inclusion x ⊆ y. Throws
/// NotSubcomplex.
Matrix induced_map(const PrimeField& f, const SimplicialComplex& x, const SimplicialComplex& y, int k);

struct GraphFiltration {
  PrimeField field;
  Quiver quiver;
  std::map<std::string, SimplicialComplex> complexes;
};

/// Throws CycleError, ShapeError (missing complex) or NotSubcomplex when an
/// edge is not an inclusion.
void validate_filtration(const GraphFiltration& chi);

/// W_v = H_k(X_v), f_e induced by inclusion. Commutativity is checked and a
/// failure raised as CommutativityError.
Representation filtration_to_gmodule(const GraphFiltration& chi, int k);

/// Vertices of a chain filtration X_0 -> ... -> X_n in order. Throws NotAChain.
std::vector<std::string> chain_order(const GraphFiltration& chi);

/// dim alpha_{H_k(X_i)}^{H_k(X_i)}(H_k(X_{i+p})) on a chain filtration.
Eigen::Index standard_persistence(const GraphFiltration& chi, std::size_t i, std::size_t p_off, int k);
/// H_k^t(X_j) = image of H_k(X_j) -> H_k(X_{j+t}); same quantity as above.
Eigen::Index persistence_group_dim(const GraphFiltration& chi, std::size_t j, std::size_t t, int k);

/// Grid coordinates parsed from vertex ids of the form "i,j,...". Throws
/// NotAGrid unless the quiver is the full axis-parallel grid DAG.
std::map<std::string, std::vector<int>> grid_coordinates(const Quiver& q);

/// dim alpha_{H_k(X_u)}^{H_k(X_u)}(H_k(X_v)) on a grid multifiltration.
/// Throws NotAGrid or NotComparable.
Eigen::Index rank_invariant(const GraphFiltration& chi, const std::string& u, const std::string& v, int k);

}  // namespace qpers
