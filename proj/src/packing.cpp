#include "hiernet/packing.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace hiernet {

std::string to_string(PackingViolationKind kind) {
  switch (kind) {
    case PackingViolationKind::kNotATree: return "not-a-tree";
    case PackingViolationKind::kMissingTarget: return "missing-S-vertex";
    case PackingViolationKind::kSharedVertex: return "shared-vertex";
    case PackingViolationKind::kSharedEdge: return "shared-edge";
  }
  return "unknown";
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kInfeasible: return "infeasible";
    case SearchStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

bool PackingReport::has(PackingViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto& v) { return v.kind == kind; });
}

std::string PackingReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream out;
  out << "invalid: " << violations.size() << " violation(s)";
  for (const auto& v : violations) out << "\n  " << to_string(v.kind) << ": " << v.detail;
  return out.str();
}

PackingReport validate_packing(const Graph& g, std::span<const VertexId> targets,
                               const std::vector<EdgeSet>& trees) {
  PackingReport report;
  std::vector<VertexId> s(targets.begin(), targets.end());
  std::sort(s.begin(), s.end());
  const auto is_target = [&](VertexId v) { return std::binary_search(s.begin(), s.end(), v); };

  std::vector<std::vector<VertexId>> spanned(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string tag = "tree " + std::to_string(i);
    bool foreign = false;
    for (const auto& e : trees[i]) {
      if (!g.has_edge(e)) {
        report.violations.push_back({PackingViolationKind::kNotATree, {i}, std::nullopt, e,
                                     tag + " uses " + to_string(e) + ", which is not an edge of the graph"});
        foreign = true;
      }
    }
    spanned[i] = trees[i].vertices();
    for (VertexId t : s) {
      if (!std::binary_search(spanned[i].begin(), spanned[i].end(), t)) {
        report.violations.push_back({PackingViolationKind::kMissingTarget, {i}, t, std::nullopt,
                                     tag + " does not reach target " + std::to_string(t)});
      }
    }
    if (!foreign) {
      const auto shape = is_stree(g, trees[i], {});
      if (!shape) {
        report.violations.push_back({PackingViolationKind::kNotATree, {i}, std::nullopt, std::nullopt,
                                     tag + ": " + shape.reason});
      }
    }
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      std::vector<VertexId> common;
      std::set_intersection(spanned[i].begin(), spanned[i].end(), spanned[j].begin(), spanned[j].end(),
                            std::back_inserter(common));
      for (VertexId v : common) {
        if (is_target(v)) continue;
        report.violations.push_back({PackingViolationKind::kSharedVertex, {i, j}, v, std::nullopt,
                                     "trees " + std::to_string(i) + " and " + std::to_string(j) +
                                         " share vertex " + std::to_string(v)});
      }
      std::vector<Edge> shared;
      std::set_intersection(trees[i].begin(), trees[i].end(), trees[j].begin(), trees[j].end(),
                            std::back_inserter(shared));
      for (const auto& e : shared) {
        report.violations.push_back({PackingViolationKind::kSharedEdge, {i, j}, std::nullopt, e,
                                     "trees " + std::to_string(i) + " and " + std::to_string(j) +
                                         " share edge " + to_string(e)});
      }
    }
  }
  return report;
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

// Augmenting-path flow on a tiny residual graph, used only for pruning.
class PruneFlow {
 public:
  explicit PruneFlow(std::size_t nodes) : arcs_(nodes) {}

  void add(std::size_t from, std::size_t to, std::size_t cap) {
    arcs_[from].push_back({to, cap, arcs_[to].size()});
    arcs_[to].push_back({from, 0, arcs_[from].size() - 1});
  }

  std::size_t run(std::size_t source, std::size_t sink, std::size_t limit) {
    std::size_t flow = 0;
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::pair<std::size_t, std::size_t>> pred(arcs_.size());
    while (flow < limit) {
      std::fill(pred.begin(), pred.end(), std::pair{kNone, kNone});
      pred[source] = {source, 0};
      std::deque<std::size_t> queue{source};
      while (!queue.empty() && pred[sink].first == kNone) {
        const auto u = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < arcs_[u].size(); ++i) {
          if (arcs_[u][i].cap > 0 && pred[arcs_[u][i].to].first == kNone) {
            pred[arcs_[u][i].to] = {u, i};
            queue.push_back(arcs_[u][i].to);
          }
        }
      }
      if (pred[sink].first == kNone) break;
      for (std::size_t v = sink; v != source;) {
        auto [u, i] = pred[v];
        arcs_[u][i].cap -= 1;
        arcs_[v][arcs_[u][i].rev].cap += 1;
        v = u;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t cap;
    std::size_t rev;
  };
  std::vector<std::vector<Arc>> arcs_;
};

class Packer {
 public:
  Packer(const Graph& g, const Triple& targets, std::uint64_t budget)
      : g_(g), n_(g.order()), s_(targets), budget_(budget) {
    std::sort(s_.begin(), s_.end());
    if (s_[0] == s_[1] || s_[1] == s_[2]) throw ArgumentError("targets must be three distinct vertices");
    if (s_[2] >= n_) throw ArgumentError("target vertex out of range");
    role_.assign(n_, -1);
    for (int i = 0; i < 3; ++i) role_[s_[i]] = i;
    const auto edges = g.edges();
    edge_list_ = edges;
    eid_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId w : g.neighbours(v)) {
        const auto it = std::lower_bound(edges.begin(), edges.end(), Edge(v, w));
        eid_[v].push_back(static_cast<std::uint32_t>(it - edges.begin()));
      }
    }
    vused_.assign(n_, 0);
    eused_.assign(edges.size(), 0);
    mark_.assign(n_, 0);
  }

  // Largest k <= cap that passes every pruning test in the current residual.
  std::size_t residual_bound(std::size_t cap) {
    std::size_t k = cap;
    while (k > 0 && !bound_ok(k)) --k;
    return k;
  }

  PackSearchResult run(std::size_t count) {
    PackSearchResult result;
    count_ = count;
    to_s1_.assign(count, {});
    to_path_.assign(count, {});
    rest_floor_.assign(count, 0);
    if (count == 0) {
      result.status = SearchStatus::kFound;
      return result;
    }
    const std::size_t non_targets = n_ - 3;
    for (std::size_t limit = needed_non_targets(count); limit <= non_targets; ++limit) {
      hit_limit_ = false;
      if (place(0, limit)) {
        result.status = SearchStatus::kFound;
        break;
      }
      if (exhausted_) {
        result.status = SearchStatus::kBudgetExhausted;
        break;
      }
      if (!hit_limit_) break;
    }
    if (result.status == SearchStatus::kFound) {
      for (const auto& ids : placed_) {
        std::vector<Edge> edges;
        for (auto e : ids) edges.push_back(edge_list_[e]);
        result.trees.emplace_back(std::move(edges));
      }
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  bool usable(VertexId a, VertexId b, std::uint32_t e) const {
    if (eused_[e]) return false;
    // Trees are ordered by their smallest neighbour of s0; later trees only
    // touch s0 through neighbours above the previous tree's key.
    if (a == s_[0] && static_cast<std::int64_t>(b) <= floor_) return false;
    if (b == s_[0] && static_cast<std::int64_t>(a) <= floor_) return false;
    return true;
  }

  bool open_vertex(VertexId w) const { return role_[w] >= 0 || !vused_[w]; }

  std::size_t avail(VertexId s) const {
    std::size_t c = 0;
    const auto nb = g_.neighbours(s);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (usable(s, nb[i], eid_[s][i]) && open_vertex(nb[i])) ++c;
    }
    return c;
  }

  std::size_t target_edges() const {
    std::size_t c = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const auto nb = g_.neighbours(s_[i]);
        auto it = std::lower_bound(nb.begin(), nb.end(), s_[j]);
        if (it != nb.end() && *it == s_[j] && usable(s_[i], s_[j], eid_[s_[i]][it - nb.begin()])) ++c;
      }
    }
    return c;
  }

  // Every tree but at most one (built from two target-target edges) needs a
  // non-target vertex.
  std::size_t needed_non_targets(std::size_t k) const {
    if (k == 0) return 0;
    return target_edges() >= 2 ? k - 1 : k;
  }

  // Max number of a-b paths through unused non-target vertices (capacity 1
  // each) and unused edges, the third target freely shared.
  std::size_t pair_capacity(int a, int b, std::size_t limit) const {
    PruneFlow net(2 * n_);
    for (VertexId v = 0; v < n_; ++v) {
      if (role_[v] < 0 && vused_[v]) continue;
      net.add(2 * v, 2 * v + 1, role_[v] >= 0 ? kUnbounded : 1);
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (!open_vertex(v)) continue;
      const auto nb = g_.neighbours(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (open_vertex(nb[i]) && usable(v, nb[i], eid_[v][i])) net.add(2 * v + 1, 2 * nb[i], 1);
      }
    }
    return net.run(2 * s_[a] + 1, 2 * s_[b], limit);
  }

  bool bound_ok(std::size_t k) const {
    if (k == 0) return true;
    std::array<std::size_t, 3> a{};
    for (int i = 0; i < 3; ++i) {
      a[i] = avail(s_[i]);
      if (a[i] < k) return false;
    }
    // Two adjacent targets whose every free edge is needed are leaves in all
    // remaining trees; the tree holding their shared edge could not reach the
    // third target.
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (a[i] != k || a[j] != k) continue;
        const auto nb = g_.neighbours(s_[i]);
        auto it = std::lower_bound(nb.begin(), nb.end(), s_[j]);
        if (it != nb.end() && *it == s_[j] && usable(s_[i], s_[j], eid_[s_[i]][it - nb.begin()])) return false;
      }
    }
    return pair_capacity(0, 1, k) >= k && pair_capacity(0, 2, k) >= k && pair_capacity(1, 2, k) >= k;
  }

  bool tick() {
    if (++nodes_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  // Marks carry the depth of the tree in progress, so a deeper tree never
  // mistakes an outer tree's path for its own.
  int path_tag(std::size_t index) const { return static_cast<int>(2 * index + 1); }
  int attach_tag(std::size_t index) const { return static_cast<int>(2 * index + 2); }

  static constexpr std::uint32_t kFar = std::numeric_limits<std::uint32_t>::max() / 4;

  // BFS over the residual graph: unused edges, s0 edges above the floor,
  // interiors restricted to targets and unused non-targets. `blocked`
  // vertices are neither entered nor expanded.
  void residual_distances(std::vector<VertexId> sources, std::vector<std::uint32_t>& dist, int blocked_tag) const {
    dist.assign(n_, kFar);
    std::deque<VertexId> queue;
    for (VertexId v : sources) {
      dist[v] = 0;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      const auto nb = g_.neighbours(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        const VertexId w = nb[i];
        if (dist[w] != kFar || !open_vertex(w) || !usable(v, w, eid_[v][i])) continue;
        if (blocked_tag != 0 && (role_[w] >= 0 || mark_[w] == blocked_tag)) continue;
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }

  // Non-target vertices any tree spanning the targets needs: a tree holding
  // three terminals has at least half the sum of their pairwise distances
  // in edges.
  static std::size_t tree_floor(std::uint32_t d01, std::uint32_t d02, std::uint32_t d12) {
    const std::size_t edges = (static_cast<std::size_t>(d01) + d02 + d12 + 1) / 2;
    return edges + 1 > 3 ? edges + 1 - 3 : 0;
  }

  // Neighbour positions of v sorted by `dist`, ties by vertex id.
  std::vector<std::uint32_t> ordered(VertexId v, const std::vector<std::uint32_t>& dist) const {
    const auto nb = g_.neighbours(v);
    std::vector<std::uint32_t> idx(nb.size());
    for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return dist[nb[a]] < dist[nb[b]]; });
    return idx;
  }

  bool place(std::size_t index, std::size_t limit) {
    if (index == count_) return true;
    const std::size_t k = count_ - index;
    if (!tick()) return false;
    if (!bound_ok(k)) return false;
    if (limit < needed_non_targets(k)) {
      hit_limit_ = true;
      return false;
    }
    residual_distances({s_[1]}, to_s1_[index], 0);
    residual_distances({s_[0]}, scratch_, 0);
    const auto d01 = scratch_[s_[1]], d02 = scratch_[s_[2]], d12 = to_s1_[index][s_[2]];
    if (d01 >= kFar || d02 >= kFar) return false;
    rest_floor_[index] = (k - 1) * tree_floor(d01, d02, d12);
    if (k * tree_floor(d01, d02, d12) > limit) {
      hit_limit_ = true;
      return false;
    }
    const std::array<int, 3> saved{mark_[s_[0]], mark_[s_[1]], mark_[s_[2]]};
    mark_[s_[0]] = path_tag(index);
    const bool found = extend_path(s_[0], index, limit, 0);
    for (int i = 0; i < 3; ++i) mark_[s_[i]] = saved[i];
    return found;
  }

  // Simple path from s0 to s1; it may pass through s2.
  bool extend_path(VertexId v, std::size_t index, std::size_t limit, std::size_t used) {
    const auto nb = g_.neighbours(v);
    const int tag = path_tag(index);
    const auto& dist = to_s1_[index];
    for (std::uint32_t i : ordered(v, dist)) {
      const VertexId w = nb[i];
      const auto e = eid_[v][i];
      if (!usable(v, w, e) || mark_[w] == tag || dist[w] >= kFar) continue;
      if (!tick()) return false;
      bool found = false;
      const bool target = role_[w] >= 0;
      if (!target && vused_[w]) continue;
      const std::size_t next = target ? used : used + 1;
      // Interior vertices still needed to reach s1; s2 may be one of them.
      std::size_t more = w == s_[1] ? 0 : dist[w] - 1;
      if (more > 0 && !target && mark_[s_[2]] != tag) --more;
      if (next + more + rest_floor_[index] > limit) {
        hit_limit_ = true;
        continue;
      }
      const int saved = mark_[w];
      cur_edges_.push_back(e);
      if (!target) cur_vertices_.push_back(w);
      mark_[w] = tag;
      if (w == s_[1]) {
        found = attach_third(index, limit, used);
      } else {
        found = extend_path(w, index, limit, next);
      }
      mark_[w] = saved;
      if (!target) cur_vertices_.pop_back();
      cur_edges_.pop_back();
      if (found) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  bool attach_third(std::size_t index, std::size_t limit, std::size_t used) {
    if (mark_[s_[2]] == path_tag(index)) return commit(index, limit, used);
    std::vector<VertexId> path;
    for (auto e : cur_edges_) {
      path.push_back(edge_list_[e].u);
      path.push_back(edge_list_[e].v);
    }
    // Distances to the path through vertices still free for the attachment.
    residual_distances(path, to_path_[index], path_tag(index));
    const int saved = mark_[s_[2]];
    mark_[s_[2]] = attach_tag(index);
    const bool found = extend_attach(s_[2], index, limit, used);
    mark_[s_[2]] = saved;
    return found;
  }

  // Path from s2 that stops at the first vertex of the s0-s1 path it meets.
  bool extend_attach(VertexId v, std::size_t index, std::size_t limit, std::size_t used) {
    const auto nb = g_.neighbours(v);
    const int ptag = path_tag(index);
    const int atag = attach_tag(index);
    const auto& dist = to_path_[index];
    for (std::uint32_t i : ordered(v, dist)) {
      const VertexId w = nb[i];
      const auto e = eid_[v][i];
      if (!usable(v, w, e) || mark_[w] == atag) continue;
      if (!tick()) return false;
      bool found = false;
      if (mark_[w] == ptag) {
        cur_edges_.push_back(e);
        found = commit(index, limit, used);
        cur_edges_.pop_back();
      } else if (role_[w] < 0 && !vused_[w] && dist[w] < kFar) {
        if (used + dist[w] + rest_floor_[index] > limit) {
          hit_limit_ = true;
          continue;
        }
        cur_edges_.push_back(e);
        cur_vertices_.push_back(w);
        const int saved = mark_[w];
        mark_[w] = atag;
        found = extend_attach(w, index, limit, used + 1);
        mark_[w] = saved;
        cur_vertices_.pop_back();
        cur_edges_.pop_back();
      }
      if (found) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  bool commit(std::size_t index, std::size_t limit, std::size_t used) {
    std::int64_t key = std::numeric_limits<std::int64_t>::max();
    for (auto e : cur_edges_) {
      const auto& ed = edge_list_[e];
      if (ed.u == s_[0]) key = std::min<std::int64_t>(key, ed.v);
      if (ed.v == s_[0]) key = std::min<std::int64_t>(key, ed.u);
    }
    for (auto v : cur_vertices_) vused_[v] = 1;
    for (auto e : cur_edges_) eused_[e] = 1;
    const auto saved_floor = floor_;
    floor_ = key;
    placed_.push_back(cur_edges_);
    std::vector<std::uint32_t> saved_edges;
    std::vector<VertexId> saved_vertices;
    saved_edges.swap(cur_edges_);
    saved_vertices.swap(cur_vertices_);

    const bool found = place(index + 1, limit - used);
    cur_edges_.swap(saved_edges);
    cur_vertices_.swap(saved_vertices);
    if (found) return true;

    placed_.pop_back();
    floor_ = saved_floor;
    for (auto e : cur_edges_) eused_[e] = 0;
    for (auto v : cur_vertices_) vused_[v] = 0;
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  Triple s_;
  std::uint64_t budget_;
  std::vector<int> role_;
  std::vector<Edge> edge_list_;
  std::vector<std::vector<std::uint32_t>> eid_;
  std::vector<char> vused_, eused_;
  std::vector<int> mark_;
  std::vector<std::uint32_t> cur_edges_;
  std::vector<VertexId> cur_vertices_;
  std::vector<std::vector<std::uint32_t>> placed_;
  std::int64_t floor_ = -1;
  std::size_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool hit_limit_ = false;
  // Per tree depth: residual distances to s1 and to the s0-s1 path, and the
  // non-target floor of the trees still to place after this one.
  std::vector<std::vector<std::uint32_t>> to_s1_, to_path_;
  std::vector<std::size_t> rest_floor_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace

PackSearchResult search_packing(const Graph& g, const Triple& targets, std::size_t count, std::uint64_t budget) {
  return Packer(g, targets, budget).run(count);
}

std::size_t packing_upper_bound(const Graph& g, const Triple& targets) {
  Packer packer(g, targets, 0);
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  for (VertexId s : targets) cap = std::min(cap, g.degree(s));
  return packer.residual_bound(cap);
}

KappaSResult kappa_S_exact(const Graph& g, const Triple& targets, std::size_t upper, std::uint64_t budget) {
  if (upper == 0) throw ArgumentError("kappa_S_exact: upper must be positive");
  KappaSResult result;
  const std::size_t bound = std::min(upper, packing_upper_bound(g, targets));
  result.upper = bound;
  result.exact = true;
  for (std::size_t r = bound; r > 0; --r) {
    auto attempt = search_packing(g, targets, r, budget);
    result.nodes += attempt.nodes;
    if (attempt.status == SearchStatus::kFound) {
      result.value = r;
      result.trees = std::move(attempt.trees);
      return result;
    }
    if (attempt.status == SearchStatus::kBudgetExhausted) {
      result.exact = false;
    } else if (result.exact) {
      result.upper = r - 1;
    }
  }
  result.value = 0;
  return result;
}

std::vector<Triple> sample_triples(std::size_t order, std::size_t count, std::uint64_t seed) {
  if (order < 3) throw ArgumentError("sample_triples needs at least 3 vertices");
  const std::size_t total = order * (order - 1) * (order - 2) / 6;
  std::vector<Triple> out;
  if (count >= total) {
    for (VertexId a = 0; a < order; ++a)
      for (VertexId b = a + 1; b < order; ++b)
        for (VertexId c = b + 1; c < order; ++c) out.push_back({a, b, c});
    return out;
  }
  // Modulo mapping keeps the draw sequence identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::set<Triple> picked;
  while (picked.size() < count) {
    Triple t{static_cast<VertexId>(rng() % order), static_cast<VertexId>(rng() % order),
             static_cast<VertexId>(rng() % order)};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) continue;
    picked.insert(t);
  }
  return {picked.begin(), picked.end()};
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

Kappa3Certificate kappa3_exact(const Graph& g, const Kappa3Mode& mode, std::uint64_t budget, std::size_t jobs) {
  if (g.order() < 3) throw ArgumentError("kappa3_exact needs at least 3 vertices");
  const std::size_t total = g.order() * (g.order() - 1) * (g.order() - 2) / 6;
  const auto sets = sample_triples(g.order(), mode.exhaustive ? total : mode.sample_count, mode.seed);

  Kappa3Certificate cert;
  cert.examined = sets.size();
  cert.exhausted = sets.size() == total;
  if (sets.empty()) return cert;

  // Every examined set admits at most its own bound, so the smallest bound
  // caps the answer; most sets then only need a feasibility search.
  std::vector<std::size_t> bound(sets.size());
  parallel_for(sets.size(), jobs, [&](std::size_t i) { bound[i] = packing_upper_bound(g, sets[i]); });
  const std::size_t cap = *std::min_element(bound.begin(), bound.end());

  struct PerSet {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<EdgeSet> trees;
    std::uint64_t nodes = 0;
  };
  std::vector<PerSet> per(sets.size());
  parallel_for(sets.size(), jobs, [&](std::size_t i) {
    auto& p = per[i];
    p.upper = bound[i];
    if (cap == 0) return;
    auto attempt = search_packing(g, sets[i], cap, budget);
    p.nodes = attempt.nodes;
    if (attempt.status == SearchStatus::kFound) {
      p.lower = cap;
      p.trees = std::move(attempt.trees);
      return;
    }
    const bool refuted = attempt.status == SearchStatus::kInfeasible;
    if (refuted) p.upper = std::min(p.upper, cap - 1);
    if (cap == 1) return;
    auto below = kappa_S_exact(g, sets[i], cap - 1, budget);
    p.nodes += below.nodes;
    p.lower = below.value;
    // The descent is capped at cap - 1, so reaching that cap only proves an
    // upper bound when the attempt at `cap` was refuted outright.
    const std::size_t proven = below.exact ? below.value : below.upper;
    if (refuted || proven < cap - 1) p.upper = std::min(p.upper, proven);
    p.trees = std::move(below.trees);
  });

  cert.value = std::numeric_limits<std::size_t>::max();
  cert.lower = std::numeric_limits<std::size_t>::max();
  for (const auto& p : per) {
    cert.value = std::min(cert.value, p.upper);
    cert.lower = std::min(cert.lower, p.lower);
    cert.nodes += p.nodes;
  }
  cert.exact = cert.lower == cert.value;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (per[i].lower == cert.value && per[i].upper == cert.value) {
      cert.minimizing = sets[i];
      cert.packing = per[i].trees;
      break;
    }
  }
  if (!cert.minimizing) {
    // No set is pinned exactly; report the weakest one.
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (per[i].lower == cert.lower) {
        cert.minimizing = sets[i];
        cert.packing = per[i].trees;
        break;
      }
    }
  }
  return cert;
}

std::optional<std::size_t> bound_upper_adjacent_min_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t delta = degree_profile(g).min_degree;
  for (const auto& e : g.edges()) {
    if (g.degree(e.u) == delta && g.degree(e.v) == delta) return delta - 1;
  }
  return std::nullopt;
}

std::size_t bound_lower_from_kappa(std::size_t kappa) {
  const std::size_t k = kappa / 4;
  const std::size_t r = kappa % 4;
  return 3 * k + (r + 1) / 2;
}

}  // namespace hiernet
