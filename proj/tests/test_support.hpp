#pragma once

// Independent reference implementations used as oracles. They share no code
// with the library beyond the Graph container and stay deliberately naive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hiernet/graph.hpp"
#include "hiernet/packing.hpp"

namespace hiernet::testing {

inline Graph graph_of(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return make_graph(n, std::span<const Edge>(edges));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
  return make_graph(n, std::span<const Edge>(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return make_graph(n, std::span<const Edge>(edges));
}

// Spanning tree over a random vertex order plus each remaining pair with
// probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId parent = order[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
    edges.emplace(std::min(parent, order[i]), std::max(parent, order[i]));
  }
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace(u, v);
    }
  }
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return make_graph(n, std::span<const Edge>(list));
}

// Plain DFS reachability avoiding `blocked`.
inline bool reachable(const Graph& g, VertexId from, VertexId to, const std::vector<char>& blocked) {
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (VertexId w : g.neighbours(v)) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

// Smallest vertex set avoiding x and y whose removal separates them, by
// enumerating every subset. Absent when x and y are adjacent.
inline std::optional<std::size_t> brute_min_vertex_cut(const Graph& g, VertexId x, VertexId y) {
  if (g.adjacent(x, y)) return std::nullopt;
  std::vector<VertexId> others;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v != x && v != y) others.push_back(v);
  }
  const std::size_t m = others.size();
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (best && size >= *best) continue;
    std::vector<char> blocked(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) blocked[others[i]] = 1;
    }
    if (!reachable(g, x, y, blocked)) best = size;
  }
  return best;
}

// Edge subsets of g that are trees whose leaves all lie in `targets` and that
// contain every target.
inline std::vector<std::vector<Edge>> minimal_strees(const Graph& g, const Triple& targets) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::vector<Edge>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Edge> chosen;
    std::vector<int> degree(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        chosen.push_back(edges[i]);
        ++degree[edges[i].u];
        ++degree[edges[i].v];
      }
    }
    std::size_t vertices = 0;
    bool leaves_ok = true;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (degree[v] == 0) continue;
      ++vertices;
      const bool target = std::find(targets.begin(), targets.end(), v) != targets.end();
      if (degree[v] == 1 && !target) leaves_ok = false;
    }
    if (!leaves_ok || vertices != chosen.size() + 1) continue;
    if (std::any_of(targets.begin(), targets.end(), [&](VertexId t) { return degree[t] == 0; })) continue;
    // Connected with |E| = |V| - 1 means a tree.
    std::vector<std::vector<VertexId>> adj(g.order());
    for (const auto& e : chosen) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(g.order(), 0);
    std::vector<VertexId> stack{targets[0]};
    seen[targets[0]] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++count;
      for (VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (count == vertices) out.push_back(std::move(chosen));
  }
  return out;
}

// Largest family of pairwise internally edge-disjoint trees, by exhaustive
// recursion over the minimal trees. Only for graphs with a handful of edges.
inline std::size_t brute_kappa_S(const Graph& g, const Triple& targets) {
  const auto trees = minimal_strees(g, targets);
  std::vector<std::set<VertexId>> inner(trees.size());
  std::vector<std::set<Edge>> edge_sets(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (const auto& e : trees[i]) {
      edge_sets[i].insert(e);
      for (VertexId v : {e.u, e.v}) {
        if (std::find(targets.begin(), targets.end(), v) == targets.end()) inner[i].insert(v);
      }
    }
  }
  auto compatible = [&](std::size_t a, std::size_t b) {
    for (VertexId v : inner[a]) {
      if (inner[b].count(v)) return false;
    }
    for (const auto& e : edge_sets[a]) {
      if (edge_sets[b].count(e)) return false;
    }
    return true;
  };
  std::size_t best = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < trees.size(); ++i) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return compatible(c, i); })) {
        chosen.push_back(i);
        grow(i + 1);
        chosen.pop_back();
      }
    }
  };
  grow(0);
  return best;
}

inline std::vector<Triple> all_triples(std::size_t n) {
  std::vector<Triple> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      for (VertexId c = b + 1; c < n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

}  // namespace hiernet::testing
