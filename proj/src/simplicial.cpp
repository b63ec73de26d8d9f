#include "qpers/simplicial.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "qpers/errors.hpp"
#include "qpers/preradical.hpp"

namespace qpers {

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  std::set<Simplex> closed;
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty() || closed.count(s)) continue;
    if (s.size() > 24) throw ShapeError("simplex with more than 24 vertices");
    // every nonempty subset is a face
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      closed.insert(std::move(face));
    }
  }
  SimplicialComplex out;
  for (const auto& s : closed) {
    const std::size_t k = s.size() - 1;
    if (out.by_dim_.size() <= k) out.by_dim_.resize(k + 1);
    out.by_dim_[k].push_back(s);
  }
  for (const auto& layer : out.by_dim_)
    for (std::size_t i = 0; i < layer.size(); ++i) out.index_.emplace(layer[i], i);
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& [s, i] : index_)
    if (!other.contains(s)) return false;
  return true;
}

std::vector<Simplex> SimplicialComplex::all() const {
  std::vector<Simplex> out;
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

Matrix boundary_matrix(const PrimeField& f, const SimplicialComplex& x, int k) {
  const auto& cols = x.simplices(k);
  const Eigen::Index rows = k <= 0 ? 0 : static_cast<Eigen::Index>(x.count(k - 1));
  Matrix d = Matrix::Zero(rows, static_cast<Eigen::Index>(cols.size()));
  if (k <= 0) return d;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Simplex& s = cols[j];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      const auto row = *x.index_of(face);
      d(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = i % 2 == 0 ? 1 : f.neg(1);
    }
  }
  return d;
}

// -- homology ----------------------------------------------------------------

Vector HomologyBasis::class_of(const PrimeField& f, const Vector& cycle) const {
  return multiply(f, quotient.map, cycle_basis.coordinates(cycle));
}

Matrix HomologyBasis::representatives(const PrimeField& f) const {
  return multiply(f, cycle_basis.basis().transpose(), quotient.lift());
}

HomologyBasis homology(const PrimeField& f, const SimplicialComplex& x, int k) {
  HomologyBasis h;
  h.k = k;
  h.cycle_basis = kernel(f, boundary_matrix(f, x, k));
  h.boundary_basis = image(f, boundary_matrix(f, x, k + 1));
  const Subspace& z = h.cycle_basis;
  const Subspace& b = h.boundary_basis;
  Matrix coords(b.dim(), z.dim());
  for (Eigen::Index r = 0; r < b.dim(); ++r) coords.row(r) = z.coordinates(b.basis().row(r).transpose()).transpose();
  h.quotient = quotient(f, z.dim(), Subspace::span(f, coords));
  return h;
}

namespace {

Eigen::Index alpha_full_dim(const Representation& m, const std::string& u, const std::string& v) {
  const Eigen::Index d = eval_alpha(m, u, Subspace::full(m.dim(u)), v).dim();
  const auto composite = dp_composite(m, u, v);
  if (!composite || rank(m.field(), *composite) != d)
    throw std::logic_error("alpha at '" + v + "' disagrees with the rank of the composite from '" + u + "'");
  return d;
}

// chains of x re-indexed as chains of y (x ⊆ y)
Matrix reindex(const SimplicialComplex& x, const SimplicialComplex& y, int k, const Matrix& chains) {
  const auto& xs = x.simplices(k);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(y.count(k)), chains.cols());
  for (std::size_t i = 0; i < xs.size(); ++i)
    out.row(static_cast<Eigen::Index>(*y.index_of(xs[i]))) = chains.row(static_cast<Eigen::Index>(i));
  return out;
}

Matrix induced_from(const PrimeField& f, const SimplicialComplex& x, const HomologyBasis& hx,
                    const SimplicialComplex& y, const HomologyBasis& hy, int k) {
  const Matrix moved = reindex(x, y, k, hx.representatives(f));
  Matrix out(hy.dim(), hx.dim());
  for (Eigen::Index c = 0; c < moved.cols(); ++c) out.col(c) = hy.class_of(f, moved.col(c));
  const Matrix boundaries = reindex(x, y, k, hx.boundary_basis.basis().transpose());
  for (Eigen::Index c = 0; c < boundaries.cols(); ++c)
    if (!hy.boundary_basis.contains(f, Vector(boundaries.col(c))))
      throw std::logic_error("boundary of a subcomplex is not a boundary in the ambient complex");
  return out;
}

}  // namespace

Matrix induced_map(const PrimeField& f, const SimplicialComplex& x, const SimplicialComplex& y, int k) {
  if (!x.is_subcomplex_of(y)) throw NotSubcomplex("complex is not a subcomplex of the target");
  return induced_from(f, x, homology(f, x, k), y, homology(f, y, k), k);
}

// -- filtrations ---------------------------------------------------------------

void validate_filtration(const GraphFiltration& chi) {
  topo_order(chi.quiver);
  for (const auto& v : chi.quiver.vertices())
    if (!chi.complexes.count(v)) throw ShapeError("vertex '" + v + "' has no complex");
  for (const auto& [v, c] : chi.complexes)
    if (!chi.quiver.has_vertex(v)) throw ShapeError("complex given for unknown vertex '" + v + "'");
  for (const auto& e : chi.quiver.edges())
    if (!chi.complexes.at(e.src).is_subcomplex_of(chi.complexes.at(e.dst)))
      throw NotSubcomplex("edge '" + e.id + "': X_" + e.src + " is not a subcomplex of X_" + e.dst);
}

Representation filtration_to_gmodule(const GraphFiltration& chi, int k) {
  validate_filtration(chi);
  const PrimeField& f = chi.field;
  std::map<std::string, HomologyBasis> h;
  std::map<std::string, Eigen::Index> dims;
  for (const auto& v : chi.quiver.vertices()) {
    h.emplace(v, homology(f, chi.complexes.at(v), k));
    dims[v] = h.at(v).dim();
  }
  std::map<std::string, Matrix> mats;
  for (const auto& e : chi.quiver.edges())
    mats[e.id] = induced_from(f, chi.complexes.at(e.src), h.at(e.src), chi.complexes.at(e.dst), h.at(e.dst), k);
  return validated(Representation(f, chi.quiver, std::move(dims), std::move(mats)));
}

std::vector<std::string> chain_order(const GraphFiltration& chi) {
  const Quiver& q = chi.quiver;
  auto order = topo_order(q);
  for (std::size_t i = 0; i < q.vertex_count(); ++i)
    if (q.in_edges(i).size() > 1 || q.out_edges(i).size() > 1)
      throw NotAChain("vertex '" + q.vertices()[i] + "' has more than one incoming or outgoing edge");
  if (!order.empty() && q.edges().size() + 1 != order.size())
    throw NotAChain("filtration quiver is not a single directed path");
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto& out = q.out_edges(q.vertex_index(order[i]));
    if (out.empty() || q.edges()[out.front()].dst != order[i + 1])
      throw NotAChain("filtration quiver is not a single directed path");
  }
  return order;
}

Eigen::Index standard_persistence(const GraphFiltration& chi, std::size_t i, std::size_t p_off, int k) {
  const auto order = chain_order(chi);
  if (i >= order.size() || p_off >= order.size() - i)
    throw Error("chain index " + std::to_string(i) + "+" + std::to_string(p_off) + " out of range for " +
                    std::to_string(order.size()) + " complexes",
                true);
  return alpha_full_dim(filtration_to_gmodule(chi, k), order[i], order[i + p_off]);
}

Eigen::Index persistence_group_dim(const GraphFiltration& chi, std::size_t j, std::size_t t, int k) {
  return standard_persistence(chi, j, t, k);
}

// -- grids -------------------------------------------------------------------

std::map<std::string, std::vector<int>> grid_coordinates(const Quiver& q) {
  std::map<std::string, std::vector<int>> coords;
  std::set<std::vector<int>> seen;
  std::size_t arity = 0;
  for (const auto& id : q.vertices()) {
    std::vector<int> c;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = std::min(id.find(',', pos), id.size());
      int value = -1;
      auto [ptr, ec] = std::from_chars(id.data() + pos, id.data() + comma, value);
      if (ec != std::errc() || ptr != id.data() + comma || value < 0)
        throw NotAGrid("vertex id '" + id + "' is not a list of non-negative integers");
      c.push_back(value);
      if (comma == id.size()) break;
      pos = comma + 1;
    }
    if (arity == 0) arity = c.size();
    if (c.size() != arity) throw NotAGrid("vertex '" + id + "' has a different number of coordinates");
    if (!seen.insert(c).second) throw NotAGrid("two vertex ids name the grid point of '" + id + "'");
    coords.emplace(id, std::move(c));
  }
  std::vector<int> extent(arity, 0);
  for (const auto& [id, c] : coords)
    for (std::size_t a = 0; a < arity; ++a) extent[a] = std::max(extent[a], c[a]);
  std::size_t points = 1, steps = 0;
  for (std::size_t a = 0; a < arity; ++a) points *= static_cast<std::size_t>(extent[a] + 1);
  for (std::size_t a = 0; a < arity; ++a) steps += points / static_cast<std::size_t>(extent[a] + 1) * extent[a];
  if (coords.size() != points) throw NotAGrid("vertices do not fill a rectangular grid");

  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : q.edges()) {
    const auto& s = coords.at(e.src);
    const auto& t = coords.at(e.dst);
    int moved = 0;
    for (std::size_t a = 0; a < arity; ++a) {
      if (t[a] == s[a] + 1) ++moved;
      else if (t[a] != s[a]) moved = 2;
    }
    if (moved != 1) throw NotAGrid("edge '" + e.id + "' is not a unit step along one axis");
    if (!pairs.insert({e.src, e.dst}).second) throw NotAGrid("edge '" + e.id + "' duplicates a grid step");
  }
  if (pairs.size() != steps) throw NotAGrid("grid steps are missing");
  return coords;
}

Eigen::Index rank_invariant(const GraphFiltration& chi, const std::string& u, const std::string& v, int k) {
  const auto coords = grid_coordinates(chi.quiver);
  auto cu = coords.find(u), cv = coords.find(v);
  if (cu == coords.end()) throw UnknownVertex(u);
  if (cv == coords.end()) throw UnknownVertex(v);
  for (std::size_t a = 0; a < cu->second.size(); ++a)
    if (cu->second[a] > cv->second[a]) throw NotComparable("'" + u + "' is not below '" + v + "' in the grid order");
  return alpha_full_dim(filtration_to_gmodule(chi, k), u, v);
}

}  // namespace qpers
