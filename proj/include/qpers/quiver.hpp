#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace qpers {

inline constexpr std::size_t kDefaultPathCap = 100'000;

struct Edge {
  std::string id;
  std::string src;
  std::string dst;
};

/// A finite quiver Q = (V, E, s, t). Parallel edges and cycles are
/// representable; acyclicity is a query, not a construction invariant.
class Quiver {
 public:
  Quiver() = default;
  /// Throws ShapeError on duplicate vertex/edge ids or dangling endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  bool has_vertex(const std::string& id) const { return vertex_index_.count(id) != 0; }
  bool has_edge(const std::string& id) const { return edge_index_.count(id) != 0; }
  /// Throws UnknownVertex.
  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;
  const Edge& edge(const std::string& id) const { return edges_[edge_index(id)]; }

  /// Edge indices leaving / entering vertex `v`, sorted by edge id.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// A directed path; the empty path at `src` is the identity morphism of the
/// path category and has src == dst.
struct Path {
  std::string src;
  std::string dst;
  std::vector<std::string> edges;

  bool empty() const noexcept { return edges.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct SourcesSinks {
  std::vector<std::string> sources;
  std::vector<std::string> sinks;
};

bool check_dag(const Quiver& q);

/// Kahn's algorithm with ties broken by vertex id. Throws CycleError.
std::vector<std::string> topo_order(const Quiver& q);

/// Sorted by vertex id. Throws CycleError.
SourcesSinks sources_sinks(const Quiver& q);

/// All directed paths u ~> v in lexicographic edge-id order. Throws
/// CycleError, or PathExplosion when more than `cap` paths exist.
std::vector<Path> enumerate_paths(const Quiver& q, const std::string& u, const std::string& v,
                                  std::size_t cap = kDefaultPathCap);

/// Number of directed paths u ~> v by dynamic programming over a topological
/// order (saturates at SIZE_MAX). Throws CycleError.
std::size_t count_paths(const Quiver& q, const std::string& u, const std::string& v);

/// Whether v is reachable from u (u reaches itself).
bool reachable(const Quiver& q, const std::string& u, const std::string& v);

bool is_weakly_connected(const Quiver& q);

/// Vertices visited by `p`, starting with p.src.
std::vector<std::string> path_vertices(const Quiver& q, const Path& p);

std::string to_string(const Path& p);

}  // namespace qpers
