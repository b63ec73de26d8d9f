#pragma once

// Commutative G-modules: representations of a DAG in GF(p)-vector spaces,
// their limits and colimits realised inside the direct sum F^D of all vertex
// spaces, and the persistence P(M) = image(lim M -> colim M).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpers/linalg.hpp"
#include "qpers/quiver.hpp"

namespace qpers {

class Representation {
 public:
  /// Structural validation only: every vertex has a dimension, every edge a
  /// dims[dst] x dims[src] matrix. Entries are reduced mod p. Throws ShapeError.
  Representation(PrimeField field, Quiver quiver, std::map<std::string, Eigen::Index> dims,
                 std::map<std::string, Matrix> mats);

  const PrimeField& field() const noexcept { return field_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  Eigen::Index dim(const std::string& vertex) const;
  const Matrix& map(const std::string& edge_id) const;
  const std::map<std::string, Eigen::Index>& dims() const noexcept { return dims_; }
  const std::map<std::string, Matrix>& mats() const noexcept { return mats_; }

  /// Set only by validated() after the commutativity check passed.
  bool is_commutative() const noexcept { return commutative_; }

 private:
  friend Representation validated(Representation r);

  PrimeField field_;
  Quiver quiver_;
  std::map<std::string, Eigen::Index> dims_;
  std::map<std::string, Matrix> mats_;
  bool commutative_ = false;
};

/// A pair of distinct paths with common endpoints and different composites.
struct CommutativityWitness {
  Path first;
  Path second;
};

struct ValidationReport {
  bool is_dag = true;
  std::optional<CommutativityWitness> violation;

  bool ok() const noexcept { return is_dag && !violation; }
};

/// Incremental confluence check over a topological order: keeps one
/// composite per reachable pair and compares every new candidate against it.
ValidationReport validate_representation(const Representation& r);

/// Returns `r` flagged commutative. Throws CycleError or CommutativityError.
Representation validated(Representation r);

/// Throws CommutativityError (or CycleError) unless `r` is commutative;
/// representations already flagged skip the check.
void require_commutative(const Representation& r);

/// f_{e_n} ... f_{e_1}; the empty path gives the identity. Throws ShapeError
/// when consecutive edges do not compose.
Matrix path_composite(const Representation& r, const Path& p);

/// Composite along any one path u ~> v via a DP over the topological order,
/// or nullopt when v is unreachable. Meaningful as "the" composite only on
/// commutative representations.
std::optional<Matrix> dp_composite(const Representation& r, const std::string& u, const std::string& v);

/// Offsets of each vertex block inside F^D, in topological order.
struct BlockLayout {
  std::vector<std::string> order;
  std::map<std::string, Eigen::Index> offset;
  Eigen::Index total_dim = 0;
};
BlockLayout block_layout(const Representation& r);

struct LimitData {
  BlockLayout layout;
  Subspace basis = Subspace::zero(0);     ///< lim(M) inside F^D
  std::map<std::string, Matrix> legs;     ///< eta_v : lim(M) -> W_v
  Eigen::Index dim() const noexcept { return basis.dim(); }
};

struct ColimitData {
  BlockLayout layout;
  Subspace relations = Subspace::zero(0);
  QuotientSpace q;                        ///< colim(M) = F^D / relations
  std::map<std::string, Matrix> legs;     ///< iota_v : W_v -> colim(M)
  Eigen::Index dim() const noexcept { return q.dim(); }
};

LimitData limit(const Representation& r);
ColimitData colimit(const Representation& r);

/// phi_M = iota_v eta_v, checked to be the same matrix for every vertex.
/// Throws DisconnectedError on a disconnected quiver.
Matrix induced_phi(const Representation& r);
Matrix induced_phi(const Representation& r, const LimitData& lim, const ColimitData& colim);

/// P(M) as a subspace of colim(M) coordinates.
Subspace persistence(const Representation& r);

}  // namespace qpers
