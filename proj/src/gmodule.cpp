#include "qpers/gmodule.hpp"

#include <string>
#include <utility>

#include "qpers/errors.hpp"

namespace qpers {

Representation::Representation(PrimeField field, Quiver quiver, std::map<std::string, Eigen::Index> dims,
                               std::map<std::string, Matrix> mats)
    : field_(field), quiver_(std::move(quiver)), dims_(std::move(dims)), mats_(std::move(mats)) {
  for (const auto& v : quiver_.vertices()) {
    auto it = dims_.find(v);
    if (it == dims_.end()) throw ShapeError("vertex '" + v + "' has no dimension");
    if (it->second < 0) throw ShapeError("vertex '" + v + "' has negative dimension");
  }
  for (const auto& [v, d] : dims_)
    if (!quiver_.has_vertex(v)) throw ShapeError("dimension given for unknown vertex '" + v + "'");
  for (const auto& [id, m] : mats_)
    if (!quiver_.has_edge(id)) throw ShapeError("matrix given for unknown edge '" + id + "'");
  for (const auto& e : quiver_.edges()) {
    auto it = mats_.find(e.id);
    if (it == mats_.end()) throw ShapeError("edge '" + e.id + "' has no matrix");
    Matrix& m = it->second;
    if (m.rows() != dims_.at(e.dst) || m.cols() != dims_.at(e.src))
      throw ShapeError("edge '" + e.id + "' (" + e.src + " -> " + e.dst + ") expects a " +
                       std::to_string(dims_.at(e.dst)) + "x" + std::to_string(dims_.at(e.src)) + " matrix, got " +
                       std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = field_.reduce(m.data()[i]);
  }
}

Eigen::Index Representation::dim(const std::string& vertex) const {
  auto it = dims_.find(vertex);
  if (it == dims_.end()) throw UnknownVertex(vertex);
  return it->second;
}

const Matrix& Representation::map(const std::string& edge_id) const {
  auto it = mats_.find(edge_id);
  if (it == mats_.end()) throw Error("unknown edge '" + edge_id + "'", true);
  return it->second;
}

// -- commutativity ----------------------------------------------------------

ValidationReport validate_representation(const Representation& r) {
  ValidationReport report;
  const Quiver& q = r.quiver();
  if (!check_dag(q)) {
    report.is_dag = false;
    return report;
  }
  const PrimeField& f = r.field();
  struct Entry {
    Matrix composite;
    Path path;
  };
  // reach[v][u]: composite and witness path for the pair u ~> v
  std::map<std::string, std::map<std::string, Entry>> reach;
  for (const auto& v : topo_order(q)) {
    auto& into_v = reach[v];
    into_v.emplace(v, Entry{identity(r.dim(v)), Path{v, v, {}}});
    for (std::size_t ei : q.in_edges(q.vertex_index(v))) {
      const Edge& e = q.edges()[ei];
      for (const auto& [u, entry] : reach.at(e.src)) {
        Matrix candidate = multiply(f, r.map(e.id), entry.composite);
        Path path = entry.path;
        path.dst = v;
        path.edges.push_back(e.id);
        auto [it, inserted] = into_v.try_emplace(u, Entry{candidate, path});
        if (!inserted && !same(it->second.composite, candidate)) {
          report.violation = CommutativityWitness{it->second.path, std::move(path)};
          return report;
        }
      }
    }
  }
  return report;
}

Representation validated(Representation r) {
  const auto report = validate_representation(r);
  if (!report.is_dag) throw CycleError("representation quiver contains a directed cycle");
  if (report.violation) {
    const auto& w = *report.violation;
    throw CommutativityError("paths " + to_string(w.first) + " and " + to_string(w.second) + " from '" +
                                 w.first.src + "' to '" + w.first.dst + "' have different composites",
                             w.first.src, w.first.dst, w.first.edges, w.second.edges);
  }
  r.commutative_ = true;
  return r;
}

void require_commutative(const Representation& r) {
  if (!r.is_commutative()) validated(r);
}

// -- composites -------------------------------------------------------------

Matrix path_composite(const Representation& r, const Path& p) {
  const Quiver& q = r.quiver();
  Matrix out = identity(r.dim(p.src));
  std::string at = p.src;
  for (const auto& id : p.edges) {
    const Edge& e = q.edge(id);
    if (e.src != at) throw ShapeError("path edge '" + id + "' does not start at '" + at + "'");
    out = multiply(r.field(), r.map(id), out);
    at = e.dst;
  }
  if (at != p.dst) throw ShapeError("path ends at '" + at + "', not '" + p.dst + "'");
  return out;
}

std::optional<Matrix> dp_composite(const Representation& r, const std::string& u, const std::string& v) {
  const Quiver& q = r.quiver();
  std::map<std::string, Matrix> from_u;
  from_u.emplace(u, identity(r.dim(u)));
  for (const auto& w : topo_order(q)) {
    auto it = from_u.find(w);
    if (it == from_u.end()) continue;
    if (w == v) return it->second;
    for (std::size_t ei : q.out_edges(q.vertex_index(w))) {
      const Edge& e = q.edges()[ei];
      if (!from_u.count(e.dst)) from_u.emplace(e.dst, multiply(r.field(), r.map(e.id), it->second));
    }
  }
  return std::nullopt;
}

// -- limits and colimits ----------------------------------------------------

BlockLayout block_layout(const Representation& r) {
  BlockLayout layout;
  layout.order = topo_order(r.quiver());
  for (const auto& v : layout.order) {
    layout.offset[v] = layout.total_dim;
    layout.total_dim += r.dim(v);
  }
  return layout;
}

LimitData limit(const Representation& r) {
  require_commutative(r);
  const PrimeField& f = r.field();
  LimitData out;
  out.layout = block_layout(r);
  const Eigen::Index total = out.layout.total_dim;

  Eigen::Index rows = 0;
  for (const auto& e : r.quiver().edges()) rows += r.dim(e.dst);
  // one row block per edge: f_e x_u - x_v = 0
  Matrix constraints = Matrix::Zero(rows, total);
  Eigen::Index row = 0;
  for (const auto& e : r.quiver().edges()) {
    const Eigen::Index du = r.dim(e.src), dv = r.dim(e.dst);
    if (dv > 0) {
      if (du > 0) constraints.block(row, out.layout.offset.at(e.src), dv, du) = r.map(e.id);
      for (Eigen::Index i = 0; i < dv; ++i)
        constraints(row + i, out.layout.offset.at(e.dst) + i) =
            f.sub(constraints(row + i, out.layout.offset.at(e.dst) + i), 1);
    }
    row += dv;
  }
  out.basis = kernel(f, constraints);
  for (const auto& v : out.layout.order)
    out.legs[v] = out.basis.basis().middleCols(out.layout.offset.at(v), r.dim(v)).transpose();
  return out;
}

ColimitData colimit(const Representation& r) {
  require_commutative(r);
  const PrimeField& f = r.field();
  ColimitData out;
  out.layout = block_layout(r);
  const Eigen::Index total = out.layout.total_dim;

  Eigen::Index rows = 0;
  for (const auto& e : r.quiver().edges()) rows += r.dim(e.src);
  // iota_v(f_e x) - iota_u(x) for each basis vector x of W_u
  Matrix generators = Matrix::Zero(rows, total);
  Eigen::Index row = 0;
  for (const auto& e : r.quiver().edges()) {
    const Eigen::Index du = r.dim(e.src), dv = r.dim(e.dst);
    const Eigen::Index ou = out.layout.offset.at(e.src), ov = out.layout.offset.at(e.dst);
    for (Eigen::Index j = 0; j < du; ++j) {
      for (Eigen::Index i = 0; i < dv; ++i) generators(row + j, ov + i) = r.map(e.id)(i, j);
      generators(row + j, ou + j) = f.sub(generators(row + j, ou + j), 1);
    }
    row += du;
  }
  out.relations = Subspace::span(f, generators);
  out.q = quotient(f, total, out.relations);
  for (const auto& v : out.layout.order) out.legs[v] = out.q.map.middleCols(out.layout.offset.at(v), r.dim(v));
  return out;
}

Matrix induced_phi(const Representation& r, const LimitData& lim, const ColimitData& colim) {
  if (!is_weakly_connected(r.quiver()))
    throw DisconnectedError("induced morphism lim -> colim is not unique on a disconnected quiver");
  const auto& order = lim.layout.order;
  if (order.empty()) return Matrix::Zero(colim.dim(), lim.dim());
  Matrix phi = multiply(r.field(), colim.legs.at(order.front()), lim.legs.at(order.front()));
  for (const auto& v : order) {
    if (!same(multiply(r.field(), colim.legs.at(v), lim.legs.at(v)), phi))
      throw Error("iota_v eta_v depends on the vertex '" + v + "'; cone/cocone data inconsistent");
  }
  return phi;
}

Matrix induced_phi(const Representation& r) {
  if (!is_weakly_connected(r.quiver()))
    throw DisconnectedError("induced morphism lim -> colim is not unique on a disconnected quiver");
  return induced_phi(r, limit(r), colimit(r));
}

Subspace persistence(const Representation& r) { return image(r.field(), induced_phi(r)); }

}  // namespace qpers
