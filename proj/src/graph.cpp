#include "hiernet/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace hiernet {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

void EdgeSet::insert(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

void EdgeSet::insert(const EdgeSet& other) {
  std::vector<Edge> merged;
  merged.reserve(edges_.size() + other.edges_.size());
  std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                 std::back_inserter(merged));
  edges_ = std::move(merged);
}

bool EdgeSet::erase(Edge e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return false;
  edges_.erase(it);
  return true;
}

bool EdgeSet::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<VertexId> EdgeSet::vertices() const {
  std::vector<VertexId> out;
  out.reserve(edges_.size() * 2);
  for (const auto& e : edges_) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  if (a >= order() || b >= order()) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(VertexId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

std::optional<VertexId> Graph::find_label(std::string_view label) const {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

Graph make_graph(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order) {
    throw GraphError("label table has " + std::to_string(labels.size()) + " entries for order " +
                     std::to_string(order));
  }
  Graph g;
  g.adjacency_.assign(order, {});
  for (const auto& e : edges) {
    if (e.u >= order || e.v >= order) {
      throw GraphError("edge " + to_string(e) + " has an endpoint outside [0, " +
                       std::to_string(order) + ")");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    degree_sum += adj.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);
  return g;
}

Graph make_graph(std::size_t order, std::span<const std::pair<VertexId, VertexId>> edges,
                 std::vector<std::string> labels) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    canon.emplace_back(a, b);
  }
  return make_graph(order, std::span<const Edge>(canon), std::move(labels));
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  if (g.order() == 0) return p;
  p.min_degree = std::numeric_limits<std::size_t>::max();
  for (VertexId v = 0; v < g.order(); ++v) {
    p.min_degree = std::min(p.min_degree, g.degree(v));
    p.max_degree = std::max(p.max_degree, g.degree(v));
  }
  if (p.min_degree == p.max_degree) p.regular_degree = p.min_degree;
  return p;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> kept) {
  Subgraph sub;
  sub.from_original.assign(g.order(), std::nullopt);
  sub.to_original.assign(kept.begin(), kept.end());
  for (VertexId i = 0; i < kept.size(); ++i) {
    if (kept[i] >= g.order()) throw GraphError("vertex " + std::to_string(kept[i]) + " out of range");
    if (sub.from_original[kept[i]]) throw GraphError("vertex " + std::to_string(kept[i]) + " listed twice");
    sub.from_original[kept[i]] = i;
  }
  std::vector<Edge> edges;
  for (VertexId i = 0; i < kept.size(); ++i) {
    for (VertexId w : g.neighbours(kept[i])) {
      if (auto j = sub.from_original[w]; j && i < *j) edges.emplace_back(i, *j);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(kept.size());
    for (VertexId v : kept) labels.push_back(g.labels()[v]);
  }
  sub.graph = make_graph(kept.size(), std::span<const Edge>(edges), std::move(labels));
  return sub;
}

Subgraph remove_vertices(const Graph& g, std::span<const VertexId> removed) {
  std::vector<bool> gone(g.order(), false);
  for (VertexId v : removed) {
    if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    gone[v] = true;
  }
  std::vector<VertexId> kept;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!gone[v]) kept.push_back(v);
  }
  if (kept.empty()) throw GraphError("removing every vertex leaves an empty graph");
  return induced_subgraph(g, kept);
}

TreeCheck is_stree(const Graph& g, const EdgeSet& tree, std::span<const VertexId> targets) {
  for (const auto& e : tree) {
    if (!g.has_edge(e)) throw GraphError("edge " + to_string(e) + " is not an edge of the graph");
  }
  if (tree.empty()) {
    std::vector<VertexId> distinct(targets.begin(), targets.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() <= 1) return {true, ""};
    return {false, "empty edge set cannot contain " + std::to_string(distinct.size()) + " targets"};
  }
  const auto spanned = tree.vertices();
  for (VertexId s : targets) {
    if (!std::binary_search(spanned.begin(), spanned.end(), s)) {
      return {false, "target " + std::to_string(s) + " not spanned"};
    }
  }
  if (tree.size() + 1 != spanned.size()) {
    return {false, std::to_string(tree.size()) + " edges over " + std::to_string(spanned.size()) +
                       " vertices is not a tree"};
  }
  // |E| = |V| - 1, so connected implies acyclic.
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(spanned.begin(), spanned.end(), v) - spanned.begin());
  };
  std::vector<std::size_t> parent(spanned.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : tree) {
    const auto a = find(index_of(e.u));
    const auto b = find(index_of(e.v));
    if (a == b) return {false, "cycle closed by edge " + to_string(e)};
    parent[a] = b;
  }
  return {true, ""};
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<VertexId> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId from, VertexId to) {
  if (from >= g.order() || to >= g.order()) throw ArgumentError("shortest_path: vertex out of range");
  constexpr auto kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> pred(g.order(), kNone);
  std::deque<VertexId> queue{from};
  pred[from] = from;
  while (!queue.empty() && pred[to] == kNone) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(v)) {
      if (pred[w] == kNone) {
        pred[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (pred[to] == kNone) return std::nullopt;
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(pred[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

EdgeSet path_edges(std::span<const VertexId> path) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < path.size(); ++i) edges.emplace_back(path[i - 1], path[i]);
  return EdgeSet(std::move(edges));
}

}  // namespace hiernet
