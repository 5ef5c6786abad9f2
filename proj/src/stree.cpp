#include "hiernet/stree.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hiernet/menger.hpp"

namespace hiernet {

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::kSameCluster: return "same-cluster";
    case CaseKind::kTwoClusters: return "two-clusters";
    case CaseKind::kThreeClusters: return "three-clusters";
  }
  return "unknown";
}

namespace {

void check_targets(const HierGraph& h, const Triple& s) {
  for (VertexId v : s) {
    if (v >= h.graph.order()) throw ArgumentError("target " + std::to_string(v) + " out of range");
  }
  if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) throw ArgumentError("targets must be distinct");
}

void ensure_valid(const Graph& g, const STreePacking& p, std::size_t expected, const char* where) {
  if (p.trees.size() != expected) {
    throw InvariantError(std::string(where) + ": built " + std::to_string(p.trees.size()) + " trees, expected " +
                         std::to_string(expected));
  }
  const auto report = validate_packing(g, p);
  if (!report.valid()) throw InvariantError(std::string(where) + ": " + report.summary());
}

EdgeSet lift(const EdgeSet& local, const Subgraph& sub) {
  std::vector<Edge> out;
  out.reserve(local.size());
  for (const auto& e : local) out.emplace_back(sub.to_original[e.u], sub.to_original[e.v]);
  return EdgeSet(std::move(out));
}

std::vector<VertexId> lift(const std::vector<VertexId>& path, const Subgraph& sub) {
  std::vector<VertexId> out;
  out.reserve(path.size());
  for (VertexId v : path) out.push_back(sub.to_original[v]);
  return out;
}

VertexId lower(VertexId v, const Subgraph& sub) {
  const auto mapped = sub.from_original.at(v);
  if (!mapped) throw InvariantError("vertex " + std::to_string(v) + " missing from subgraph");
  return *mapped;
}

Subgraph cluster_graph(const HierGraph& h, ClusterId c) {
  const auto members = h.cluster_vertices(c);
  return induced_subgraph(h.graph, members);
}

Subgraph without_cluster(const HierGraph& h, ClusterId c) {
  const auto members = h.cluster_vertices(c);
  return remove_vertices(h.graph, members);
}

// Fan from `source` to `anchors` inside `g` (host ids through `sub`). An
// anchor equal to the source gets the one-vertex path. Result is indexed like
// `anchors`.
std::vector<std::vector<VertexId>> fan_to_anchors(const Subgraph& sub, VertexId source,
                                                  const std::vector<VertexId>& anchors, const char* where) {
  std::vector<std::vector<VertexId>> out(anchors.size());
  std::vector<VertexId> targets;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (anchors[i] == source) {
      out[i] = {source};
    } else {
      targets.push_back(lower(anchors[i], sub));
    }
  }
  if (targets.empty()) return out;
  const auto fan = k_fan(sub.graph, lower(source, sub), targets, targets.size());
  if (!fan.complete()) {
    throw InvariantError(std::string(where) + ": fan reached " + std::to_string(fan.family.size()) + " of " +
                         std::to_string(targets.size()) + " anchors");
  }
  for (const auto& local : fan.family.paths) {
    auto path = lift(local, sub);
    const auto it = std::find(anchors.begin(), anchors.end(), path.back());
    out[static_cast<std::size_t>(it - anchors.begin())] = std::move(path);
  }
  return out;
}

// Cross edge between clusters a and b: the one whose endpoint in the
// lower-indexed cluster has the smaller id. Returns the endpoint in `a`.
VertexId pick_cross_endpoint(const HierGraph& h, ClusterId a, ClusterId b) {
  std::optional<std::pair<VertexId, VertexId>> best;  // (endpoint in lower cluster, endpoint in a)
  for (VertexId v : h.cluster_vertices(a)) {
    const VertexId w = h.out_neighbour[v];
    if (h.cluster_of(w) != b) continue;
    const VertexId key = a < b ? v : w;
    if (!best || key < best->first) best = std::pair{key, v};
  }
  if (!best) {
    throw InvariantError("no cross edge between clusters " + std::to_string(a) + " and " + std::to_string(b));
  }
  return best->second;
}

}  // namespace

CaseTag classify(const HierGraph& h, const Triple& s) {
  check_targets(h, s);
  const ClusterId a = h.cluster_of(s[0]), b = h.cluster_of(s[1]), c = h.cluster_of(s[2]);
  if (a == b && b == c) return {CaseKind::kSameCluster, {a}};
  if (a == b) return {CaseKind::kTwoClusters, {a, c}};
  if (a == c) return {CaseKind::kTwoClusters, {a, b}};
  if (b == c) return {CaseKind::kTwoClusters, {b, a}};
  return {CaseKind::kThreeClusters, {a, b, c}};
}

EdgeSet steiner_tree_connect(const Graph& g, std::span<const VertexId> terminals) {
  if (terminals.empty()) throw ArgumentError("steiner_tree_connect: no terminals");
  const VertexId root = terminals.front();
  EdgeSet unioned;
  for (VertexId t : terminals.subspan(1)) {
    const auto path = shortest_path(g, root, t);
    if (!path) throw GraphError("steiner_tree_connect: terminal " + std::to_string(t) + " is unreachable");
    unioned.insert(path_edges(*path));
  }
  if (unioned.empty()) return unioned;

  // Spanning tree of the union by BFS from the root, then strip non-terminal leaves.
  const Graph u = make_graph(g.order(), std::span<const Edge>(unioned.edges()));
  constexpr auto kNone = std::numeric_limits<VertexId>::max();
  std::vector<VertexId> parent(g.order(), kNone);
  parent[root] = root;
  std::deque<VertexId> queue{root};
  std::vector<Edge> tree;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : u.neighbours(v)) {
      if (parent[w] != kNone) continue;
      parent[w] = v;
      tree.emplace_back(v, w);
      queue.push_back(w);
    }
  }
  std::vector<bool> keep_vertex(g.order(), false);
  for (VertexId t : terminals) keep_vertex[t] = true;
  EdgeSet result(std::move(tree));
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<std::size_t> deg(g.order(), 0);
    for (const auto& e : result) {
      ++deg[e.u];
      ++deg[e.v];
    }
    std::vector<Edge> next;
    for (const auto& e : result) {
      if ((deg[e.u] == 1 && !keep_vertex[e.u]) || (deg[e.v] == 1 && !keep_vertex[e.v])) {
        pruned = true;
      } else {
        next.push_back(e);
      }
    }
    result = EdgeSet(std::move(next));
  }
  return result;
}

PackSearchResult base_cluster_pack(const Graph& g, const Triple& targets, std::size_t r, std::uint64_t budget) {
  if (r == 0) throw ArgumentError("base_cluster_pack: r must be positive");
  return search_packing(g, targets, r, budget);
}

STreePacking case_same_cluster(const HierGraph& h, const Triple& s, std::uint64_t search_budget) {
  const auto tag = classify(h, s);
  if (tag.kind != CaseKind::kSameCluster) throw ArgumentError("case_same_cluster: targets span several clusters");
  const std::size_t d = h.base_degree;
  const ClusterId c = tag.clusters.front();
  STreePacking out;
  out.targets = s;

  if (d > 1) {
    const auto inside = cluster_graph(h, c);
    const Triple local{lower(s[0], inside), lower(s[1], inside), lower(s[2], inside)};
    auto found = base_cluster_pack(inside.graph, local, d - 1, search_budget);
    if (found.status == SearchStatus::kBudgetExhausted) {
      throw SearchBudgetError("case_same_cluster: in-cluster search exhausted " +
                                  std::to_string(found.nodes) + " nodes",
                              found.nodes);
    }
    if (found.status == SearchStatus::kInfeasible) {
      throw InvariantError("case_same_cluster: cluster " + std::to_string(c) + " admits fewer than " +
                           std::to_string(d - 1) + " trees for these targets");
    }
    for (const auto& t : found.trees) out.trees.push_back(lift(t, inside));
  }

  const auto rest = without_cluster(h, c);
  std::vector<VertexId> hats;
  for (VertexId v : s) hats.push_back(lower(h.out_neighbour[v], rest));
  EdgeSet outer = lift(steiner_tree_connect(rest.graph, hats), rest);
  for (VertexId v : s) outer.insert(Edge(v, h.out_neighbour[v]));
  out.trees.push_back(std::move(outer));

  ensure_valid(h.graph, out, d, "case_same_cluster");
  return out;
}

STreePacking case_two_clusters(const HierGraph& h, const Triple& s) {
  const auto tag = classify(h, s);
  if (tag.kind != CaseKind::kTwoClusters) throw ArgumentError("case_two_clusters: targets are not split 2 + 1");
  const std::size_t d = h.base_degree;
  const ClusterId c = tag.clusters[0];
  std::vector<VertexId> pair;
  VertexId z = 0;
  for (VertexId v : s) {
    if (h.cluster_of(v) == c) {
      pair.push_back(v);
    } else {
      z = v;
    }
  }
  const VertexId x = pair[0], y = pair[1];

  const auto inside = cluster_graph(h, c);
  const auto paths = disjoint_paths(inside.graph, lower(x, inside), lower(y, inside), d);
  if (!paths.complete()) {
    throw InvariantError("case_two_clusters: cluster " + std::to_string(c) + " has only " +
                         std::to_string(paths.family.size()) + " disjoint paths");
  }
  std::vector<std::vector<VertexId>> p;
  std::vector<VertexId> anchors, exits;
  for (const auto& local : paths.family.paths) {
    p.push_back(lift(local, inside));
    anchors.push_back(p.back()[1]);  // successor of x, possibly y itself
    exits.push_back(h.out_neighbour[anchors.back()]);
  }

  const auto rest = without_cluster(h, c);
  const auto q = fan_to_anchors(rest, z, exits, "case_two_clusters");

  STreePacking out;
  out.targets = s;
  for (std::size_t i = 0; i < d; ++i) {
    EdgeSet t = path_edges(p[i]);
    t.insert(path_edges(q[i]));
    t.insert(Edge(anchors[i], exits[i]));
    out.trees.push_back(std::move(t));
  }
  ensure_valid(h.graph, out, d, "case_two_clusters");
  return out;
}

STreePacking case_three_clusters(const HierGraph& h, const Triple& s) {
  const auto tag = classify(h, s);
  if (tag.kind != CaseKind::kThreeClusters) throw ArgumentError("case_three_clusters: targets share a cluster");
  const std::size_t d = h.base_degree;

  std::vector<ClusterId> middle;
  for (ClusterId m = 0; m < h.cluster_count && middle.size() < d; ++m) {
    if (std::find(tag.clusters.begin(), tag.clusters.end(), m) == tag.clusters.end()) middle.push_back(m);
  }
  if (middle.size() < d) throw PreconditionError("case_three_clusters: fewer than d spare clusters");

  STreePacking out;
  out.targets = s;
  out.trees.assign(d, EdgeSet{});
  for (std::size_t k = 0; k < 3; ++k) {
    const ClusterId host = tag.clusters[k];
    std::vector<VertexId> anchors;
    for (ClusterId m : middle) anchors.push_back(pick_cross_endpoint(h, host, m));
    const auto inside = cluster_graph(h, host);
    const auto fan = fan_to_anchors(inside, s[k], anchors, "case_three_clusters");
    for (std::size_t i = 0; i < d; ++i) {
      out.trees[i].insert(path_edges(fan[i]));
      out.trees[i].insert(Edge(anchors[i], h.out_neighbour[anchors[i]]));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const auto inside = cluster_graph(h, middle[i]);
    std::vector<VertexId> entries;
    for (const auto& e : out.trees[i]) {
      for (VertexId v : {e.u, e.v}) {
        if (h.cluster_of(v) == middle[i]) entries.push_back(lower(v, inside));
      }
    }
    out.trees[i].insert(lift(steiner_tree_connect(inside.graph, entries), inside));
  }
  ensure_valid(h.graph, out, d, "case_three_clusters");
  return out;
}

BuiltPacking build_strees(const HierGraph& h, const Triple& targets, std::uint64_t search_budget) {
  check_targets(h, targets);
  if (auto report = validate_hn(h); !report.ok()) throw CompositionError(std::move(report));
  if (!h.construction_applies()) {
    throw PreconditionError("cluster count " + std::to_string(h.cluster_count) + " is below d + 3 = " +
                            std::to_string(h.base_degree + 3) + "; use the exact oracle instead");
  }
  BuiltPacking built;
  built.tag = classify(h, targets);
  switch (built.tag.kind) {
    case CaseKind::kSameCluster: built.packing = case_same_cluster(h, targets, search_budget); break;
    case CaseKind::kTwoClusters: built.packing = case_two_clusters(h, targets); break;
    case CaseKind::kThreeClusters: built.packing = case_three_clusters(h, targets); break;
  }
  return built;
}

}  // namespace hiernet
