#pragma once

// Preradicals on a representation with diagram-restricted Hom sets.
//
// alpha(anchor, N) at W   = sum of f(N) over path composites anchor ~> W
// omega(anchor, N) at W   = intersection of f^-1(N) over composites W ~> anchor
// meet / join             = pointwise intersection / sum
// prod(s, t)              = s evaluated with every term corestricted to t(W)
// coprod(s, t)            = q^-1(t evaluated on the quotient diagram M / s(M))
//
// Empty sums are the zero subspace and empty intersections the full space.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qpers/gmodule.hpp"
#include "qpers/linalg.hpp"
#include "qpers/quiver.hpp"

namespace qpers {

/// A subspace literal resolved against a vertex space at evaluation time.
struct SubspaceSpec {
  enum class Kind { Full, Zero, Span };
  Kind kind = Kind::Full;
  std::vector<std::vector<Scalar>> rows;  ///< spanning vectors when kind == Span

  static SubspaceSpec full() { return {Kind::Full, {}}; }
  static SubspaceSpec zero() { return {Kind::Zero, {}}; }
  static SubspaceSpec of(const Subspace& s);

  /// Throws DimensionMismatch when a spanning row has the wrong length.
  Subspace resolve(const PrimeField& f, Eigen::Index dim) const;
  std::string to_string() const;
};

class PreradicalExpr {
 public:
  enum class Op { Alpha, Omega, Meet, Join, Prod, Coprod };

  static PreradicalExpr alpha(std::string anchor, SubspaceSpec n);
  static PreradicalExpr omega(std::string anchor, SubspaceSpec n);
  static PreradicalExpr meet(PreradicalExpr a, PreradicalExpr b);
  static PreradicalExpr join(PreradicalExpr a, PreradicalExpr b);
  static PreradicalExpr prod(PreradicalExpr a, PreradicalExpr b);
  static PreradicalExpr coprod(PreradicalExpr a, PreradicalExpr b);

  Op op() const noexcept;
  bool is_leaf() const noexcept { return op() == Op::Alpha || op() == Op::Omega; }
  const std::string& anchor() const;
  const SubspaceSpec& subspace() const;
  const PreradicalExpr& lhs() const;
  const PreradicalExpr& rhs() const;

  /// Canonical text in the expression language; parse(to_string()) round-trips.
  std::string to_string() const;

 private:
  struct Node;
  explicit PreradicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the expression language
///   expr     := alpha(v, S) | omega(v, S) | (meet|join|prod|coprod)(expr, expr)
///   S        := full | zero | [row, ...]      row := [int, ...]
/// Whitespace-insensitive. Throws ParseError carrying a byte offset.
PreradicalExpr parse_expr(std::string_view text);
SubspaceSpec parse_subspace(std::string_view text);

using Assignment = std::map<std::string, Subspace>;

// -- hom sets and leaf preradicals -----------------------------------------

/// Path composites u ~> v. On a representation flagged commutative this is
/// the single DP composite; otherwise every path is enumerated (up to `cap`)
/// and exact duplicates are dropped. Identity is included when u == v.
std::vector<Matrix> hom_set(const Representation& d, const std::string& u, const std::string& v,
                            std::size_t cap = kDefaultPathCap);

Subspace eval_alpha(const Representation& d, const std::string& anchor, const Subspace& n,
                    const std::string& target, std::size_t cap = kDefaultPathCap);
Subspace eval_omega(const Representation& d, const std::string& anchor, const Subspace& n,
                    const std::string& source, std::size_t cap = kDefaultPathCap);

Subspace eval_expr(const Representation& d, const PreradicalExpr& expr, const std::string& target,
                   std::size_t cap = kDefaultPathCap);
/// The assignment v -> expr(W_v) over every vertex.
Assignment eval_assignment(const Representation& d, const PreradicalExpr& expr, std::size_t cap = kDefaultPathCap);

struct AssignmentReport {
  std::vector<std::string> violating_edges;  ///< edges e = (u, v) with f_e(a[u]) not inside a[v]
  bool ok() const noexcept { return violating_edges.empty(); }
};

/// Throws DimensionMismatch / ShapeError on a malformed assignment.
AssignmentReport check_assignment(const Representation& r, const Assignment& a);

// -- persistence via alpha ------------------------------------------------------

/// The representation with two extra vertices: `lim_vertex` with legs eta_s
/// into every source and `colim_vertex` receiving iota_t from every sink.
struct ExtendedDiagram {
  Representation diagram;
  std::string lim_vertex;
  std::string colim_vertex;
  LimitData lim;
  ColimitData colim;
  std::vector<std::string> sources;
  std::vector<std::string> sinks;
};

/// Requires a commutative representation; the result is flagged commutative.
ExtendedDiagram extend(const Representation& r);

/// Sum of f(sub) over composites lim(M) -> colim(M) in the extended diagram.
/// `submodule` defaults to all of lim(M), which is what the preimage of the
/// full product of source spaces under lim(M) -> prod W_s always is.
Subspace extended_alpha_persistence(const Representation& r,
                                    const std::optional<Subspace>& submodule = std::nullopt);

/// As above, keeping only composites whose first step is eta_s with s in
/// `subset`. Throws InvalidSubset when a listed vertex is not a source.
Subspace source_subset_persistence(const Representation& r, const std::vector<std::string>& subset,
                                   const std::optional<Subspace>& submodule = std::nullopt);

// -- information flow ---------------------------------------------------------

using FlowInput = std::variant<Subspace, PreradicalExpr>;

struct FlowResult {
  Subspace received = Subspace::zero(0);  ///< sum over incoming e=(u,target) of f_e(value(u))
  std::optional<Subspace> bound;          ///< join of the expressions at target (expr inputs only)
  std::optional<bool> within_bound;
  std::vector<std::string> warnings;
};

/// Throws MissingEdge when a key of `per_source` has no edge into `target`.
FlowResult flow_receive(const Representation& d, const std::string& target,
                        const std::map<std::string, FlowInput>& per_source, std::size_t cap = kDefaultPathCap);

/// Sum over sources s and paths s ~> target of image(f_path); the information
/// the product of all source spaces sends to `target`.
Subspace source_info(const Representation& d, const std::string& target, std::size_t cap = kDefaultPathCap);

}  // namespace qpers
