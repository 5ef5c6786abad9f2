#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hiernet {

using VertexId = std::uint32_t;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed construction input (bad endpoint, self-loop, empty remainder).
class GraphError : public Error {
 public:
  using Error::Error;
};

// Caller passed arguments outside an operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Internal contradiction: a guaranteed object could not be produced.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Unordered vertex pair, stored with the smaller index first.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
  bool operator==(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Sorted, duplicate-free set of canonical edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  void insert(Edge e);
  void insert(const EdgeSet& other);
  bool erase(Edge e);
  bool contains(Edge e) const;

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  // Sorted distinct endpoints.
  std::vector<VertexId> vertices() const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<Edge> edges_;
};

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> regular_degree;
};

// Immutable simple undirected graph with dense ids and sorted adjacency.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const VertexId> neighbours(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId a, VertexId b) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  // Canonical edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Display label, or the decimal id when no label table exists.
  std::string label(VertexId v) const;
  std::optional<VertexId> find_label(std::string_view label) const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph make_graph(std::size_t, std::span<const Edge>, std::vector<std::string>);
  friend Graph make_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>,
                          std::vector<std::string>);

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// Duplicate pairs collapse. Throws GraphError on out-of-range endpoints or
// self-loops, and when a non-empty label table has the wrong size.
Graph make_graph(std::size_t order, std::span<const Edge> edges,
                 std::vector<std::string> labels = {});
Graph make_graph(std::size_t order, std::span<const std::pair<VertexId, VertexId>> edges,
                 std::vector<std::string> labels = {});

DegreeProfile degree_profile(const Graph& g);

struct Subgraph {
  Graph graph;
  // new index -> original index
  std::vector<VertexId> to_original;
  // original index -> new index, absent for removed vertices
  std::vector<std::optional<VertexId>> from_original;
};

// Induced subgraph on V(g) minus `removed`. Labels are carried over.
// Throws GraphError when nothing would remain.
Subgraph remove_vertices(const Graph& g, std::span<const VertexId> removed);

// Induced subgraph on exactly `kept` (in the given order).
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> kept);

struct TreeCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// True iff `tree` spans a connected acyclic subgraph containing all of
// `targets`. A lone target with an empty edge set counts as a tree.
// Throws GraphError when an edge of `tree` is not an edge of g.
TreeCheck is_stree(const Graph& g, const EdgeSet& tree, std::span<const VertexId> targets);

// Minimum-hop path from `from` to `to`, expanding lower-index neighbours first.
std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId from, VertexId to);

// Hop distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

bool is_connected(const Graph& g);

// Edges of a vertex sequence, in order.
EdgeSet path_edges(std::span<const VertexId> path);

}  // namespace hiernet
