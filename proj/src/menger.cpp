#include "hiernet/menger.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace hiernet {
namespace {

constexpr std::size_t kWide = std::numeric_limits<std::uint32_t>::max();

// Residual network over split vertices: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(std::size_t nodes) : arcs_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::size_t cap) {
    arcs_[from].push_back({to, cap, cap, arcs_[to].size()});
    arcs_[to].push_back({from, 0, 0, arcs_[from].size() - 1});
    return arcs_[from].size() - 1;
  }

  // Shortest augmenting paths, at most `limit` units.
  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t limit) {
    std::size_t flow = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pred(arcs_.size());
    while (flow < limit) {
      constexpr auto kNone = std::numeric_limits<std::size_t>::max();
      std::fill(pred.begin(), pred.end(), std::pair{kNone, kNone});
      pred[source] = {source, 0};
      std::deque<std::size_t> queue{source};
      while (!queue.empty() && pred[sink].first == kNone) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < arcs_[u].size(); ++i) {
          const auto& a = arcs_[u][i];
          if (a.cap > 0 && pred[a.to].first == kNone) {
            pred[a.to] = {u, i};
            queue.push_back(a.to);
          }
        }
      }
      if (pred[sink].first == kNone) break;
      for (std::size_t v = sink; v != source;) {
        auto [u, i] = pred[v];
        auto& a = arcs_[u][i];
        a.cap -= 1;
        arcs_[v][a.rev].cap += 1;
        v = u;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<bool> reachable(std::size_t source) const {
    std::vector<bool> seen(arcs_.size(), false);
    std::deque<std::size_t> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& a : arcs_[u]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  // Follows one unit of flow out of `from`, lowest arc first, consuming it.
  std::optional<std::size_t> take_unit(std::size_t from) {
    for (auto& a : arcs_[from]) {
      if (a.orig > 0 && a.orig > a.cap + a.taken) {
        ++a.taken;
        return a.to;
      }
    }
    return std::nullopt;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t cap;
    std::size_t orig;
    std::size_t rev;
    std::size_t taken = 0;
  };
  std::vector<std::vector<Arc>> arcs_;
};

std::size_t in_node(VertexId v) { return 2 * static_cast<std::size_t>(v); }
std::size_t out_node(VertexId v) { return 2 * static_cast<std::size_t>(v) + 1; }

// Unit split arcs everywhere except `source` and `sink_vertex`; edge arcs are
// wide so minimum cuts consist of split arcs only. A direct source-sink edge
// keeps unit capacity so it counts once.
SplitNetwork build_network(const Graph& g, VertexId source, std::optional<VertexId> sink_vertex,
                           std::size_t extra_nodes) {
  SplitNetwork net(2 * g.order() + extra_nodes);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v != source && v != sink_vertex) net.add_arc(in_node(v), out_node(v), 1);
  }
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId w : g.neighbours(u)) {
      const bool direct = (u == source && w == sink_vertex);
      net.add_arc(out_node(u), in_node(w), direct ? 1 : kWide);
    }
  }
  return net;
}

CutWitness extract_cut(const Graph& g, const SplitNetwork& net, VertexId source,
                       std::optional<VertexId> sink_vertex) {
  const auto seen = net.reachable(out_node(source));
  CutWitness cut;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v == source) {
      cut.side_a.push_back(v);
    } else if (v != sink_vertex && seen[in_node(v)] && !seen[out_node(v)]) {
      cut.separator.push_back(v);
    } else if (seen[in_node(v)] || seen[out_node(v)]) {
      cut.side_a.push_back(v);
    } else {
      cut.side_b.push_back(v);
    }
  }
  if (sink_vertex && g.adjacent(source, *sink_vertex)) cut.direct_edge = Edge(source, *sink_vertex);
  return cut;
}

void require_vertex(const Graph& g, VertexId v, const char* what) {
  if (v >= g.order()) throw ArgumentError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

}  // namespace

PathsResult disjoint_paths(const Graph& g, VertexId x, VertexId y, std::size_t k) {
  require_vertex(g, x, "disjoint_paths");
  require_vertex(g, y, "disjoint_paths");
  if (k == 0) throw ArgumentError("disjoint_paths: k must be positive");
  if (x == y) throw ArgumentError("disjoint_paths: endpoints must differ");

  auto net = build_network(g, x, y, 0);
  const std::size_t flow = net.max_flow(out_node(x), in_node(y), k);

  PathsResult result;
  result.family.source = x;
  result.family.targets = {y};
  for (std::size_t i = 0; i < flow; ++i) {
    std::vector<VertexId> path{x};
    std::size_t node = out_node(x);
    while (node != in_node(y)) {
      const auto next = net.take_unit(node);
      if (!next) throw InvariantError("disjoint_paths: flow decomposition stalled");
      node = *next;
      if (node % 2 == 0) path.push_back(static_cast<VertexId>(node / 2));
    }
    result.family.paths.push_back(std::move(path));
  }
  if (flow < k) result.cut = extract_cut(g, net, x, y);
  return result;
}

PathsResult k_fan(const Graph& g, VertexId x, const std::vector<VertexId>& targets, std::size_t k) {
  require_vertex(g, x, "k_fan");
  if (k == 0) throw ArgumentError("k_fan: k must be positive");
  std::vector<VertexId> ys = targets;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (VertexId y : ys) require_vertex(g, y, "k_fan");
  if (ys.size() < k) {
    throw ArgumentError("k_fan: " + std::to_string(ys.size()) + " targets cannot end " + std::to_string(k) + " paths");
  }
  if (std::binary_search(ys.begin(), ys.end(), x)) throw ArgumentError("k_fan: source is one of the targets");

  std::vector<bool> is_target(g.order(), false);
  for (VertexId y : ys) is_target[y] = true;

  const std::size_t sink = 2 * g.order();
  auto net = build_network(g, x, std::nullopt, 1);
  for (VertexId y : ys) net.add_arc(out_node(y), sink, kWide);
  const std::size_t flow = net.max_flow(out_node(x), sink, k);

  PathsResult result;
  result.family.source = x;
  result.family.targets = ys;
  result.family.fan = true;
  for (std::size_t i = 0; i < flow; ++i) {
    std::vector<VertexId> path{x};
    std::size_t node = out_node(x);
    bool truncated = false;
    while (node != sink) {
      const auto next = net.take_unit(node);
      if (!next) throw InvariantError("k_fan: flow decomposition stalled");
      node = *next;
      if (!truncated && node != sink && node % 2 == 0) {
        const auto v = static_cast<VertexId>(node / 2);
        path.push_back(v);
        // A path may run through a target to reach another; cut it at the first.
        truncated = is_target[v];
      }
    }
    result.family.paths.push_back(std::move(path));
  }
  if (flow < k) result.cut = extract_cut(g, net, x, std::nullopt);
  return result;
}

ConnectivityResult vertex_connectivity(const Graph& g, PairStrategy strategy) {
  const std::size_t n = g.order();
  if (n < 2) throw ArgumentError("vertex_connectivity needs at least 2 vertices");
  ConnectivityResult result;
  if (g.edge_count() == n * (n - 1) / 2) {
    result.kappa = n - 1;
    result.complete_graph = true;
    return result;
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (strategy == PairStrategy::kAuto) strategy = n < 64 ? PairStrategy::kAllPairs : PairStrategy::kNeighbourhood;
  if (strategy == PairStrategy::kAllPairs) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (!g.adjacent(a, b)) pairs.emplace_back(a, b);
      }
    }
  } else {
    VertexId v = 0;
    for (VertexId u = 1; u < n; ++u) {
      if (g.degree(u) < g.degree(v)) v = u;
    }
    for (VertexId w = 0; w < n; ++w) {
      if (w != v && !g.adjacent(v, w)) pairs.emplace_back(v, w);
    }
    const auto nbrs = g.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.adjacent(nbrs[i], nbrs[j])) pairs.emplace_back(nbrs[i], nbrs[j]);
      }
    }
  }

  std::size_t best = degree_profile(g).min_degree + 1;
  for (const auto& [a, b] : pairs) {
    auto r = disjoint_paths(g, a, b, best);
    if (r.cut) {
      best = r.family.size();
      result.witness = std::move(r.cut);
      result.pair = std::pair{a, b};
      if (best == 0) break;
    }
  }
  result.kappa = best;
  return result;
}

std::string check_path_family(const Graph& g, const PathFamily& family) {
  std::vector<bool> is_target(g.order(), false);
  for (VertexId t : family.targets) {
    if (t >= g.order()) return "target " + std::to_string(t) + " out of range";
    is_target[t] = true;
  }
  if (!family.fan && family.targets.size() != 1) return "paths family needs exactly one target";
  std::vector<int> owner(g.order(), -1);
  std::vector<bool> terminal_used(g.order(), false);
  for (std::size_t i = 0; i < family.paths.size(); ++i) {
    const auto& p = family.paths[i];
    const std::string tag = "path " + std::to_string(i) + ": ";
    if (p.empty() || p.front() != family.source) return tag + "does not start at the source";
    if (p.size() < 2) return tag + "has no edge";
    const VertexId last = p.back();
    if (!is_target[last]) return tag + "does not end at a target";
    if (family.fan) {
      if (terminal_used[last]) return tag + "reuses terminal " + std::to_string(last);
      terminal_used[last] = true;
    }
    std::vector<VertexId> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return tag + "repeats a vertex";
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] >= g.order()) return tag + "vertex out of range";
      if (j > 0 && !g.adjacent(p[j - 1], p[j])) {
        return tag + "step " + to_string(Edge(p[j - 1], p[j])) + " is not an edge";
      }
      const bool shared_end = (j == 0) || (!family.fan && j + 1 == p.size());
      if (shared_end) continue;
      if (family.fan && j + 1 < p.size() && is_target[p[j]]) {
        return tag + "passes through target " + std::to_string(p[j]);
      }
      if (owner[p[j]] != -1) {
        return tag + "shares vertex " + std::to_string(p[j]) + " with path " + std::to_string(owner[p[j]]);
      }
      owner[p[j]] = static_cast<int>(i);
    }
  }
  return {};
}

std::string check_cut(const Graph& g, const CutWitness& cut) {
  if (cut.side_a.empty() || cut.side_b.empty()) return "empty side";
  std::vector<int> mark(g.order(), 0);  // 1 separator, 2 side_a, 3 side_b
  for (VertexId v : cut.separator) mark.at(v) = 1;
  for (VertexId v : cut.side_a) mark.at(v) = 2;
  for (VertexId v : cut.side_b) mark.at(v) = 3;
  std::vector<bool> seen(g.order(), false);
  std::deque<VertexId> queue(cut.side_a.begin(), cut.side_a.end());
  for (VertexId v : cut.side_a) seen[v] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(v)) {
      if (seen[w] || mark[w] == 1) continue;
      if (cut.direct_edge && Edge(v, w) == *cut.direct_edge) continue;
      if (mark[w] == 3) return "vertex " + std::to_string(w) + " reachable from side a";
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace hiernet
