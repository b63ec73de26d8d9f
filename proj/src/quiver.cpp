#include "qpers/quiver.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "qpers/errors.hpp"

namespace qpers {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertex_index_.emplace(vertices_[i], i).second) throw ShapeError("duplicate vertex id '" + vertices_[i] + "'");
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second) throw ShapeError("duplicate edge id '" + e.id + "'");
    if (!has_vertex(e.src)) throw ShapeError("edge '" + e.id + "' starts at unknown vertex '" + e.src + "'");
    if (!has_vertex(e.dst)) throw ShapeError("edge '" + e.id + "' ends at unknown vertex '" + e.dst + "'");
    out_[vertex_index_.at(e.src)].push_back(i);
    in_[vertex_index_.at(e.dst)].push_back(i);
  }
  auto by_id = [this](std::size_t a, std::size_t b) { return edges_[a].id < edges_[b].id; };
  for (auto& l : out_) std::sort(l.begin(), l.end(), by_id);
  for (auto& l : in_) std::sort(l.begin(), l.end(), by_id);
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw UnknownVertex(id);
  return it->second;
}

std::size_t Quiver::edge_index(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw Error("unknown edge '" + id + "'", true);
  return it->second;
}

namespace {

// Kahn's algorithm; returns fewer than |V| indices when a cycle exists.
std::vector<std::size_t> kahn(const Quiver& q) {
  const auto& ids = q.vertices();
  std::vector<std::size_t> indegree(ids.size(), 0);
  for (const auto& e : q.edges()) ++indegree[q.vertex_index(e.dst)];
  auto later = [&ids](std::size_t a, std::size_t b) { return ids[a] > ids[b]; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t v = 0; v < ids.size(); ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  order.reserve(ids.size());
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t e : q.out_edges(v)) {
      const std::size_t w = q.vertex_index(q.edges()[e].dst);
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

std::vector<std::size_t> checked_order(const Quiver& q) {
  auto order = kahn(q);
  if (order.size() != q.vertex_count()) throw CycleError("quiver contains a directed cycle");
  return order;
}

}  // namespace

bool check_dag(const Quiver& q) { return kahn(q).size() == q.vertex_count(); }

std::vector<std::string> topo_order(const Quiver& q) {
  std::vector<std::string> out;
  for (std::size_t v : checked_order(q)) out.push_back(q.vertices()[v]);
  return out;
}

SourcesSinks sources_sinks(const Quiver& q) {
  checked_order(q);
  SourcesSinks out;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (q.in_edges(v).empty()) out.sources.push_back(q.vertices()[v]);
    if (q.out_edges(v).empty()) out.sinks.push_back(q.vertices()[v]);
  }
  std::sort(out.sources.begin(), out.sources.end());
  std::sort(out.sinks.begin(), out.sinks.end());
  return out;
}

std::size_t count_paths(const Quiver& q, const std::string& u, const std::string& v) {
  const auto order = checked_order(q);
  const std::size_t src = q.vertex_index(u), dst = q.vertex_index(v);
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> count(q.vertex_count(), 0);
  count[src] = 1;
  for (std::size_t w : order) {
    if (count[w] == 0) continue;
    for (std::size_t e : q.out_edges(w)) {
      std::size_t& c = count[q.vertex_index(q.edges()[e].dst)];
      c = (c > kMax - count[w]) ? kMax : c + count[w];
    }
  }
  return count[dst];
}

bool reachable(const Quiver& q, const std::string& u, const std::string& v) {
  std::vector<bool> seen(q.vertex_count(), false);
  std::vector<std::size_t> stack{q.vertex_index(u)};
  const std::size_t target = q.vertex_index(v);
  seen[stack.back()] = true;
  while (!stack.empty()) {
    const std::size_t w = stack.back();
    stack.pop_back();
    if (w == target) return true;
    for (std::size_t e : q.out_edges(w)) {
      const std::size_t x = q.vertex_index(q.edges()[e].dst);
      if (!seen[x]) {
        seen[x] = true;
        stack.push_back(x);
      }
    }
  }
  return false;
}

std::vector<Path> enumerate_paths(const Quiver& q, const std::string& u, const std::string& v, std::size_t cap) {
  if (count_paths(q, u, v) > cap) throw PathExplosion(cap);
  const std::size_t target = q.vertex_index(v);
  // vertices that can still reach the target
  std::vector<bool> alive(q.vertex_count(), false);
  for (std::size_t w = 0; w < q.vertex_count(); ++w) alive[w] = reachable(q, q.vertices()[w], v);

  std::vector<Path> out;
  std::vector<std::string> trail;
  std::function<void(std::size_t)> walk = [&](std::size_t w) {
    if (w == target) out.push_back(Path{u, v, trail});
    for (std::size_t e : q.out_edges(w)) {
      const std::size_t x = q.vertex_index(q.edges()[e].dst);
      if (!alive[x]) continue;
      trail.push_back(q.edges()[e].id);
      walk(x);
      trail.pop_back();
    }
  };
  if (alive[q.vertex_index(u)]) walk(q.vertex_index(u));
  return out;
}

bool is_weakly_connected(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 0;
  while (!stack.empty()) {
    const std::size_t w = stack.back();
    stack.pop_back();
    ++visited;
    auto visit = [&](std::size_t x) {
      if (!seen[x]) {
        seen[x] = true;
        stack.push_back(x);
      }
    };
    for (std::size_t e : q.out_edges(w)) visit(q.vertex_index(q.edges()[e].dst));
    for (std::size_t e : q.in_edges(w)) visit(q.vertex_index(q.edges()[e].src));
  }
  return visited == n;
}

std::vector<std::string> path_vertices(const Quiver& q, const Path& p) {
  std::vector<std::string> out{p.src};
  for (const auto& id : p.edges) out.push_back(q.edge(id).dst);
  return out;
}

std::string to_string(const Path& p) {
  if (p.edges.empty()) return "(" + p.src + ")";
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) s += (i ? "," : "") + p.edges[i];
  return "[" + s + "]";
}

}  // namespace qpers
