#include "qpers/preradical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qpers/errors.hpp"

namespace qpers {

// -- SubspaceSpec -------------------------------------------------------------

SubspaceSpec SubspaceSpec::of(const Subspace& s) {
  SubspaceSpec spec{Kind::Span, {}};
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    std::vector<Scalar> row(static_cast<std::size_t>(s.ambient_dim()));
    for (Eigen::Index j = 0; j < s.ambient_dim(); ++j) row[static_cast<std::size_t>(j)] = s.basis()(i, j);
    spec.rows.push_back(std::move(row));
  }
  if (spec.rows.empty()) spec.kind = Kind::Zero;
  return spec;
}

Subspace SubspaceSpec::resolve(const PrimeField& f, Eigen::Index dim) const {
  switch (kind) {
    case Kind::Full:
      return Subspace::full(dim);
    case Kind::Zero:
      return Subspace::zero(dim);
    case Kind::Span:
      break;
  }
  for (const auto& row : rows)
    if (static_cast<Eigen::Index>(row.size()) != dim)
      throw DimensionMismatch("subspace row of length " + std::to_string(row.size()) + " in a space of dimension " +
                              std::to_string(dim));
  return Subspace::span(f, from_rows(f, rows, dim));
}

std::string SubspaceSpec::to_string() const {
  if (kind == Kind::Full) return "full";
  if (kind == Kind::Zero) return "zero";
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) out << (j ? "," : "") << rows[i][j];
    out << ']';
  }
  out << ']';
  return out.str();
}

// -- PreradicalExpr -------------------------------------------------------------

struct PreradicalExpr::Node {
  Op op;
  std::string anchor;
  SubspaceSpec n;
  std::optional<PreradicalExpr> lhs, rhs;
};

PreradicalExpr PreradicalExpr::alpha(std::string anchor, SubspaceSpec n) {
  return PreradicalExpr(std::make_shared<const Node>(Node{Op::Alpha, std::move(anchor), std::move(n), {}, {}}));
}
PreradicalExpr PreradicalExpr::omega(std::string anchor, SubspaceSpec n) {
  return PreradicalExpr(std::make_shared<const Node>(Node{Op::Omega, std::move(anchor), std::move(n), {}, {}}));
}
PreradicalExpr PreradicalExpr::meet(PreradicalExpr a, PreradicalExpr b) {
  return PreradicalExpr(std::make_shared<const Node>(Node{Op::Meet, {}, {}, std::move(a), std::move(b)}));
}
PreradicalExpr PreradicalExpr::join(PreradicalExpr a, PreradicalExpr b) {
  return PreradicalExpr(std::make_shared<const Node>(Node{Op::Join, {}, {}, std::move(a), std::move(b)}));
}
PreradicalExpr PreradicalExpr::prod(PreradicalExpr a, PreradicalExpr b) {
  return PreradicalExpr(std::make_shared<const Node>(Node{Op::Prod, {}, {}, std::move(a), std::move(b)}));
}
PreradicalExpr PreradicalExpr::coprod(PreradicalExpr a, PreradicalExpr b) {
  return PreradicalExpr(std::make_shared<const Node>(Node{Op::Coprod, {}, {}, std::move(a), std::move(b)}));
}

PreradicalExpr::Op PreradicalExpr::op() const noexcept { return node_->op; }

const std::string& PreradicalExpr::anchor() const {
  if (!is_leaf()) throw std::logic_error("anchor() on a binary preradical node");
  return node_->anchor;
}
const SubspaceSpec& PreradicalExpr::subspace() const {
  if (!is_leaf()) throw std::logic_error("subspace() on a binary preradical node");
  return node_->n;
}
const PreradicalExpr& PreradicalExpr::lhs() const {
  if (is_leaf()) throw std::logic_error("lhs() on a leaf preradical");
  return *node_->lhs;
}
const PreradicalExpr& PreradicalExpr::rhs() const {
  if (is_leaf()) throw std::logic_error("rhs() on a leaf preradical");
  return *node_->rhs;
}

std::string PreradicalExpr::to_string() const {
  switch (op()) {
    case Op::Alpha:
      return "alpha(" + anchor() + "," + subspace().to_string() + ")";
    case Op::Omega:
      return "omega(" + anchor() + "," + subspace().to_string() + ")";
    case Op::Meet:
      return "meet(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Op::Join:
      return "join(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Op::Prod:
      return "prod(" + lhs().to_string() + "," + rhs().to_string() + ")";
    case Op::Coprod:
      return "coprod(" + lhs().to_string() + "," + rhs().to_string() + ")";
  }
  return {};
}

// -- hom sets ---------------------------------------------------------------------

std::vector<Matrix> hom_set(const Representation& d, const std::string& u, const std::string& v, std::size_t cap) {
  std::vector<Matrix> out;
  if (d.is_commutative()) {
    if (auto m = dp_composite(d, u, v)) out.push_back(std::move(*m));
    return out;
  }
  for (const auto& path : enumerate_paths(d.quiver(), u, v, cap)) {
    Matrix m = path_composite(d, path);
    if (std::none_of(out.begin(), out.end(), [&](const Matrix& x) { return same(x, m); })) out.push_back(std::move(m));
  }
  return out;
}

namespace {

void require_ambient(const Representation& d, const std::string& vertex, const Subspace& n) {
  if (n.ambient_dim() != d.dim(vertex))
    throw DimensionMismatch("subspace of F^" + std::to_string(n.ambient_dim()) + " anchored at '" + vertex +
                            "' of dimension " + std::to_string(d.dim(vertex)));
}

Subspace alpha_terms(const Representation& d, const std::string& anchor, const Subspace& n,
                     const std::string& target, const std::optional<Subspace>& restrict, std::size_t cap) {
  const PrimeField& f = d.field();
  Subspace acc = Subspace::zero(d.dim(target));
  for (const auto& m : hom_set(d, anchor, target, cap)) {
    Subspace term = subspace_image(f, m, n);
    if (restrict) term = subspace_intersect(f, term, *restrict);
    acc = subspace_sum(f, acc, term);
  }
  return acc;
}

Subspace omega_terms(const Representation& d, const std::string& anchor, const Subspace& n,
                     const std::string& source, const std::optional<Subspace>& restrict, std::size_t cap) {
  const PrimeField& f = d.field();
  Subspace acc = restrict ? *restrict : Subspace::full(d.dim(source));
  for (const auto& m : hom_set(d, source, anchor, cap)) acc = subspace_intersect(f, acc, subspace_preimage(f, m, n));
  return acc;
}

// An evaluation scope: the diagram currently evaluated on plus, for quotient
// diagrams built by coprod, the maps from original vertex coordinates into it.
struct Scope {
  const Representation& rep;
  const std::map<std::string, Matrix>* to_local;
  std::size_t cap;

  Subspace leaf_subspace(const PreradicalExpr& leaf) const {
    const std::string& a = leaf.anchor();
    if (!to_local) return leaf.subspace().resolve(rep.field(), rep.dim(a));
    const Matrix& m = to_local->at(a);
    return subspace_image(rep.field(), m, leaf.subspace().resolve(rep.field(), m.cols()));
  }
};

Subspace eval_in(const Scope& scope, const PreradicalExpr& e, const std::string& target,
                 const std::optional<Subspace>& restrict);

Subspace eval_coprod(const Scope& scope, const PreradicalExpr& e, const std::string& target,
                     const std::optional<Subspace>& restrict) {
  const Representation& rep = scope.rep;
  const PrimeField& f = rep.field();
  std::map<std::string, QuotientSpace> qs;
  std::map<std::string, Eigen::Index> dims;
  for (const auto& v : rep.quiver().vertices()) {
    auto q = quotient(f, rep.dim(v), eval_in(scope, e.lhs(), v, std::nullopt));
    dims[v] = q.dim();
    qs.emplace(v, std::move(q));
  }
  std::map<std::string, Matrix> mats;
  for (const auto& edge : rep.quiver().edges())
    mats[edge.id] = multiply(f, multiply(f, qs.at(edge.dst).map, rep.map(edge.id)), qs.at(edge.src).lift());
  Representation quotient_rep(f, rep.quiver(), dims, mats);
  if (rep.is_commutative() && validate_representation(quotient_rep).ok())
    quotient_rep = validated(std::move(quotient_rep));

  std::map<std::string, Matrix> to_local;
  for (const auto& v : rep.quiver().vertices())
    to_local[v] = scope.to_local ? multiply(f, qs.at(v).map, scope.to_local->at(v)) : qs.at(v).map;

  const Scope inner{quotient_rep, &to_local, scope.cap};
  Subspace result = subspace_preimage(f, qs.at(target).map, eval_in(inner, e.rhs(), target, std::nullopt));
  if (restrict) result = subspace_intersect(f, result, *restrict);
  return result;
}

Subspace eval_in(const Scope& scope, const PreradicalExpr& e, const std::string& target,
                 const std::optional<Subspace>& restrict) {
  const PrimeField& f = scope.rep.field();
  switch (e.op()) {
    case PreradicalExpr::Op::Alpha:
      return alpha_terms(scope.rep, e.anchor(), scope.leaf_subspace(e), target, restrict, scope.cap);
    case PreradicalExpr::Op::Omega:
      return omega_terms(scope.rep, e.anchor(), scope.leaf_subspace(e), target, restrict, scope.cap);
    case PreradicalExpr::Op::Meet:
      return subspace_intersect(f, eval_in(scope, e.lhs(), target, restrict), eval_in(scope, e.rhs(), target, restrict));
    case PreradicalExpr::Op::Join:
      return subspace_sum(f, eval_in(scope, e.lhs(), target, restrict), eval_in(scope, e.rhs(), target, restrict));
    case PreradicalExpr::Op::Prod: {
      const Subspace inner = eval_in(scope, e.rhs(), target, restrict);
      return eval_in(scope, e.lhs(), target, inner);
    }
    case PreradicalExpr::Op::Coprod:
      return eval_coprod(scope, e, target, restrict);
  }
  throw std::logic_error("unhandled preradical node");
}

void check_anchors(const Representation& d, const PreradicalExpr& e) {
  if (e.is_leaf()) {
    d.quiver().vertex_index(e.anchor());
    e.subspace().resolve(d.field(), d.dim(e.anchor()));
    return;
  }
  check_anchors(d, e.lhs());
  check_anchors(d, e.rhs());
}

}  // namespace

Subspace eval_alpha(const Representation& d, const std::string& anchor, const Subspace& n, const std::string& target,
                    std::size_t cap) {
  require_ambient(d, anchor, n);
  return alpha_terms(d, anchor, n, target, std::nullopt, cap);
}

Subspace eval_omega(const Representation& d, const std::string& anchor, const Subspace& n, const std::string& source,
                    std::size_t cap) {
  require_ambient(d, anchor, n);
  return omega_terms(d, anchor, n, source, std::nullopt, cap);
}

Subspace eval_expr(const Representation& d, const PreradicalExpr& expr, const std::string& target, std::size_t cap) {
  check_anchors(d, expr);
  d.quiver().vertex_index(target);
  return eval_in(Scope{d, nullptr, cap}, expr, target, std::nullopt);
}

Assignment eval_assignment(const Representation& d, const PreradicalExpr& expr, std::size_t cap) {
  check_anchors(d, expr);
  Assignment out;
  for (const auto& v : d.quiver().vertices()) out.emplace(v, eval_in(Scope{d, nullptr, cap}, expr, v, std::nullopt));
  return out;
}

AssignmentReport check_assignment(const Representation& r, const Assignment& a) {
  AssignmentReport report;
  for (const auto& v : r.quiver().vertices()) {
    auto it = a.find(v);
    if (it == a.end()) throw ShapeError("assignment has no subspace for vertex '" + v + "'");
    require_ambient(r, v, it->second);
  }
  for (const auto& e : r.quiver().edges()) {
    const Subspace pushed = subspace_image(r.field(), r.map(e.id), a.at(e.src));
    if (!a.at(e.dst).contains(r.field(), pushed)) report.violating_edges.push_back(e.id);
  }
  return report;
}

// -- extended diagram -------------------------------------------------------------

namespace {

std::string fresh_id(const Quiver& q, std::string base, bool vertex) {
  while (vertex ? q.has_vertex(base) : q.has_edge(base)) base += "_";
  return base;
}

}  // namespace

ExtendedDiagram extend(const Representation& r) {
  require_commutative(r);
  const Quiver& q = r.quiver();
  LimitData lim = limit(r);
  ColimitData colim = colimit(r);
  const auto ends = sources_sinks(q);

  const std::string lim_id = fresh_id(q, "LIM", true);
  std::string colim_id = fresh_id(q, "COLIM", true);
  if (colim_id == lim_id) colim_id += "_";

  std::vector<std::string> vertices = q.vertices();
  vertices.push_back(lim_id);
  vertices.push_back(colim_id);
  std::vector<Edge> edges = q.edges();
  auto dims = r.dims();
  auto mats = r.mats();
  dims[lim_id] = lim.dim();
  dims[colim_id] = colim.dim();
  for (const auto& s : ends.sources) {
    const std::string id = fresh_id(q, "eta:" + s, false);
    edges.push_back(Edge{id, lim_id, s});
    mats[id] = lim.legs.at(s);
  }
  for (const auto& t : ends.sinks) {
    const std::string id = fresh_id(q, "iota:" + t, false);
    edges.push_back(Edge{id, t, colim_id});
    mats[id] = colim.legs.at(t);
  }
  Representation ext(r.field(), Quiver(std::move(vertices), std::move(edges)), std::move(dims), std::move(mats));
  return ExtendedDiagram{validated(std::move(ext)), lim_id, colim_id, std::move(lim), std::move(colim),
                         ends.sources, ends.sinks};
}

Subspace source_subset_persistence(const Representation& r, const std::vector<std::string>& subset,
                                   const std::optional<Subspace>& submodule) {
  require_commutative(r);
  if (!is_weakly_connected(r.quiver()))
    throw DisconnectedError("induced morphism lim -> colim is not unique on a disconnected quiver");
  const auto ends = sources_sinks(r.quiver());
  for (const auto& s : subset)
    if (!std::binary_search(ends.sources.begin(), ends.sources.end(), s))
      throw InvalidSubset("'" + s + "' is not a source vertex");

  const ExtendedDiagram ext = extend(r);
  const PrimeField& f = r.field();
  const Subspace sub = submodule ? *submodule : Subspace::full(ext.lim.dim());
  if (sub.ambient_dim() != ext.lim.dim())
    throw DimensionMismatch("submodule must live in lim(M) of dimension " + std::to_string(ext.lim.dim()));

  Subspace acc = Subspace::zero(ext.colim.dim());
  const std::set<std::string> chosen(subset.begin(), subset.end());
  for (const auto& s : chosen) {
    const Matrix& eta = ext.lim.legs.at(s);
    for (const auto& rest : hom_set(ext.diagram, s, ext.colim_vertex))
      acc = subspace_sum(f, acc, subspace_image(f, multiply(f, rest, eta), sub));
  }
  return acc;
}

Subspace extended_alpha_persistence(const Representation& r, const std::optional<Subspace>& submodule) {
  require_commutative(r);
  return source_subset_persistence(r, sources_sinks(r.quiver()).sources, submodule);
}

// -- flow ---------------------------------------------------------------------------

FlowResult flow_receive(const Representation& d, const std::string& target,
                        const std::map<std::string, FlowInput>& per_source, std::size_t cap) {
  const Quiver& q = d.quiver();
  const PrimeField& f = d.field();
  const std::size_t t = q.vertex_index(target);
  FlowResult out;
  out.received = Subspace::zero(d.dim(target));

  std::set<std::string> feeding;
  for (std::size_t ei : q.in_edges(t)) feeding.insert(q.edges()[ei].src);
  if (feeding.empty()) out.warnings.push_back("vertex '" + target + "' has no incoming edges");
  for (const auto& [u, value] : per_source)
    if (!feeding.count(u)) throw MissingEdge("no edge from '" + u + "' into '" + target + "'");

  std::map<std::string, Subspace> values;
  bool all_exprs = !per_source.empty();
  std::optional<Subspace> bound;
  for (const auto& [u, value] : per_source) {
    if (const auto* s = std::get_if<Subspace>(&value)) {
      require_ambient(d, u, *s);
      values.emplace(u, *s);
      all_exprs = false;
    } else {
      const auto& expr = std::get<PreradicalExpr>(value);
      values.emplace(u, eval_expr(d, expr, u, cap));
      Subspace at_target = eval_expr(d, expr, target, cap);
      bound = bound ? subspace_sum(f, *bound, at_target) : at_target;
    }
  }
  for (std::size_t ei : q.in_edges(t)) {
    const Edge& e = q.edges()[ei];
    auto it = values.find(e.src);
    if (it == values.end()) continue;
    out.received = subspace_sum(f, out.received, subspace_image(f, d.map(e.id), it->second));
  }
  if (all_exprs && bound) {
    out.within_bound = bound->contains(f, out.received);
    out.bound = std::move(bound);
  }
  return out;
}

Subspace source_info(const Representation& d, const std::string& target, std::size_t cap) {
  const PrimeField& f = d.field();
  Subspace acc = Subspace::zero(d.dim(target));
  for (const auto& s : sources_sinks(d.quiver()).sources)
    for (const auto& m : hom_set(d, s, target, cap)) acc = subspace_sum(f, acc, image(f, m));
  return acc;
}

}  // namespace qpers
