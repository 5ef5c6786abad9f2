#include "hiernet/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace hiernet {

BudgetError::BudgetError(std::size_t required, std::size_t budget)
    : Error("graph needs " + std::to_string(required) + " vertices, budget is " +
            std::to_string(budget) + " (raise with --max-vertices or HIERNET_MAX_VERTICES)"),
      required_(required),
      budget_(budget) {}

std::size_t default_vertex_budget() {
  if (const char* env = std::getenv("HIERNET_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return kDefaultVertexBudget;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kHs: return "hs";
    case Family::kHcn: return "hcn";
    case Family::kHfq: return "hfq";
    case Family::kCustom: return "custom";
  }
  return "custom";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "hs") return Family::kHs;
  if (name == "hcn") return Family::kHcn;
  if (name == "hfq") return Family::kHfq;
  if (name == "custom") return Family::kCustom;
  return std::nullopt;
}

std::vector<VertexId> HierGraph::cluster_vertices(ClusterId c) const {
  std::vector<VertexId> out(cluster_order);
  std::iota(out.begin(), out.end(), vertex(c, 0));
  return out;
}

std::string to_string(HnViolationKind kind) {
  switch (kind) {
    case HnViolationKind::kOrderMismatch: return "order-mismatch";
    case HnViolationKind::kMapSize: return "map-size";
    case HnViolationKind::kOutNeighbourCount: return "out-neighbour-count";
    case HnViolationKind::kOutNeighbourMismatch: return "out-neighbour-mismatch";
    case HnViolationKind::kSameCluster: return "out-neighbour-in-same-cluster";
    case HnViolationKind::kNotInvolution: return "not-an-involution";
    case HnViolationKind::kCrossCount: return "cross-edge-count";
    case HnViolationKind::kCrossTotal: return "cross-edge-total";
    case HnViolationKind::kClusterNotRegular: return "cluster-not-regular";
    case HnViolationKind::kNotRegular: return "not-regular";
  }
  return "unknown";
}

std::string HnReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (const auto& v : violations) out << "\n  " << to_string(v.kind) << ": " << v.detail;
  return out.str();
}

CompositionError::CompositionError(HnReport report)
    : Error("invalid hierarchical composition: " + report.summary()), report_(std::move(report)) {}

namespace {

std::string vname(VertexId v) { return "vertex " + std::to_string(v); }

void check_budget(std::size_t required, std::size_t budget) {
  if (required > budget) throw BudgetError(required, budget);
}

// Saturating n! so oversized requests still report a meaningful count.
std::size_t factorial_capped(std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() / i) return std::numeric_limits<std::size_t>::max();
    out *= i;
  }
  return out;
}

std::size_t pow2_capped(std::size_t n) {
  if (n >= 63) return std::numeric_limits<std::size_t>::max();
  return std::size_t{1} << n;
}

std::size_t square_capped(std::size_t t) {
  if (t != 0 && t > std::numeric_limits<std::size_t>::max() / t) return std::numeric_limits<std::size_t>::max();
  return t * t;
}

std::vector<std::string> permutations(std::size_t n) {
  std::string p;
  for (std::size_t i = 1; i <= n; ++i) p.push_back(static_cast<char>('0' + i));
  std::vector<std::string> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Position 1 exchanged with position i (1-based).
std::string swap_first(std::string p, std::size_t i) {
  std::swap(p[0], p[i - 1]);
  return p;
}

std::string bit_label(std::size_t value, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (value & (std::size_t{1} << (n - 1 - i))) s[i] = '1';
  }
  return s;
}

Graph cube_like(std::size_t n, bool folded) {
  const std::size_t order = std::size_t{1} << n;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(order);
  const std::size_t mask = order - 1;
  for (std::size_t v = 0; v < order; ++v) {
    labels.push_back(bit_label(v, n));
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t w = v ^ (std::size_t{1} << b);
      if (v < w) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
    if (folded && v < (v ^ mask)) edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(v ^ mask));
  }
  return make_graph(order, std::span<const Edge>(edges), std::move(labels));
}

// Shared cross rules of the two-level families: the diagonal vertex <c,c>
// pairs with <f(c),f(c)>, any other <c,p> pairs with <p,c>.
template <typename Partner>
std::vector<CrossEdge> two_level_cross(std::size_t t, Partner diagonal_partner) {
  std::vector<CrossEdge> cross;
  cross.reserve(t * t / 2);
  for (ClusterId c = 0; c < t; ++c) {
    for (VertexId p = 0; p < t; ++p) {
      ClusterVertex self{c, p};
      ClusterVertex other = (c == p) ? ClusterVertex{diagonal_partner(c), diagonal_partner(c)}
                                     : ClusterVertex{static_cast<ClusterId>(p), static_cast<VertexId>(c)};
      const auto self_id = static_cast<std::size_t>(c) * t + p;
      const auto other_id = static_cast<std::size_t>(other.cluster) * t + other.local;
      if (self_id < other_id) cross.push_back({self, other});
    }
  }
  return cross;
}

std::vector<std::string> two_level_labels(const std::vector<std::string>& names) {
  std::vector<std::string> labels;
  labels.reserve(names.size() * names.size());
  for (const auto& c : names) {
    for (const auto& p : names) labels.push_back(two_tuple_label(c, p));
  }
  return labels;
}

}  // namespace

HnReport validate_hn(const HierGraph& h) {
  HnReport report;
  auto add = [&](HnViolationKind kind, std::string detail, std::optional<VertexId> v = std::nullopt,
                 std::optional<std::pair<ClusterId, ClusterId>> pair = std::nullopt) {
    report.violations.push_back({kind, std::move(detail), v, pair});
  };
  const std::size_t t = h.cluster_count;
  const std::size_t k = h.cluster_order;
  const std::size_t order = h.graph.order();
  if (k != t) {
    add(HnViolationKind::kOrderMismatch,
        "cluster order " + std::to_string(k) + " differs from cluster count " + std::to_string(t));
  }
  if (k == 0 || order != t * k) {
    add(HnViolationKind::kOrderMismatch, "graph order " + std::to_string(order) + " is not " +
                                             std::to_string(t) + " x " + std::to_string(k));
    return report;
  }
  if (h.out_neighbour.size() != order) {
    add(HnViolationKind::kMapSize, "out-neighbour map has " + std::to_string(h.out_neighbour.size()) +
                                       " entries for " + std::to_string(order) + " vertices");
    return report;
  }

  const std::size_t d = h.base_degree;
  std::vector<std::size_t> pair_count(t * t, 0);
  std::size_t cross_total = 0;
  for (VertexId v = 0; v < order; ++v) {
    const ClusterId cv = h.cluster_of(v);
    std::size_t inside = 0;
    std::vector<VertexId> outside;
    for (VertexId w : h.graph.neighbours(v)) {
      if (h.cluster_of(w) == cv) {
        ++inside;
      } else {
        outside.push_back(w);
        if (v < w) {
          ++pair_count[cv * t + h.cluster_of(w)];
          ++pair_count[h.cluster_of(w) * t + cv];
          ++cross_total;
        }
      }
    }
    if (outside.size() != 1) {
      add(HnViolationKind::kOutNeighbourCount,
          vname(v) + " has " + std::to_string(outside.size()) + " neighbours outside its cluster", v);
    }
    const VertexId out = h.out_neighbour[v];
    if (out >= order) {
      add(HnViolationKind::kOutNeighbourMismatch, vname(v) + " maps to nonexistent vertex " + std::to_string(out), v);
    } else {
      if (h.cluster_of(out) == cv) {
        add(HnViolationKind::kSameCluster, vname(v) + " has its out-neighbour " + std::to_string(out) +
                                               " in its own cluster " + std::to_string(cv), v);
      }
      if (out == v || h.out_neighbour[out] != v) {
        add(HnViolationKind::kNotInvolution, vname(v) + " -> " + std::to_string(out) + " -> " +
                                                 std::to_string(h.out_neighbour[out]), v);
      }
      if (!h.graph.adjacent(v, out) || (outside.size() == 1 && outside.front() != out)) {
        add(HnViolationKind::kOutNeighbourMismatch,
            vname(v) + " maps to " + std::to_string(out) + " which is not its outside neighbour", v);
      }
    }
    if (inside != d) {
      add(HnViolationKind::kClusterNotRegular, vname(v) + " has cluster degree " + std::to_string(inside) +
                                                   ", expected " + std::to_string(d), v);
    }
    if (h.graph.degree(v) != d + 1) {
      add(HnViolationKind::kNotRegular, vname(v) + " has degree " + std::to_string(h.graph.degree(v)) +
                                            ", expected " + std::to_string(d + 1), v);
    }
  }
  for (ClusterId i = 0; i < t; ++i) {
    for (ClusterId j = i + 1; j < t; ++j) {
      const std::size_t c = pair_count[i * t + j];
      if (c < 1 || c > 2) {
        add(HnViolationKind::kCrossCount, "clusters " + std::to_string(i) + " and " + std::to_string(j) +
                                              " share " + std::to_string(c) + " cross edges",
            std::nullopt, std::pair{i, j});
      }
    }
  }
  if (2 * cross_total != t * t) {
    add(HnViolationKind::kCrossTotal, std::to_string(cross_total) + " cross edges, expected t^2/2 = " +
                                          std::to_string(t * t) + "/2");
  }
  return report;
}

HierGraph compose_hn(const Graph& base, const std::vector<CrossEdge>& cross, Family family,
                     std::size_t dimension, std::vector<std::string> labels) {
  const std::size_t t = base.order();
  if (t == 0) throw ArgumentError("compose_hn: empty base graph");
  const std::size_t order = t * t;

  HnReport pre;
  std::vector<std::size_t> hits(order, 0);
  std::vector<VertexId> out(order, 0);
  std::vector<Edge> edges;
  edges.reserve(t * base.edge_count() + cross.size());
  for (ClusterId c = 0; c < t; ++c) {
    for (const auto& e : base.edges()) {
      edges.emplace_back(static_cast<VertexId>(c * t + e.u), static_cast<VertexId>(c * t + e.v));
    }
  }
  for (const auto& ce : cross) {
    if (ce.a.cluster >= t || ce.b.cluster >= t || ce.a.local >= t || ce.b.local >= t) {
      pre.violations.push_back({HnViolationKind::kOrderMismatch,
                                "cross edge endpoint outside the " + std::to_string(t) + " x " +
                                    std::to_string(t) + " layout",
                                std::nullopt, std::nullopt});
      continue;
    }
    const auto a = static_cast<VertexId>(ce.a.cluster * t + ce.a.local);
    const auto b = static_cast<VertexId>(ce.b.cluster * t + ce.b.local);
    if (ce.a.cluster == ce.b.cluster) {
      pre.violations.push_back({HnViolationKind::kSameCluster,
                                "cross edge " + to_string(Edge(a, b)) + " stays inside cluster " +
                                    std::to_string(ce.a.cluster),
                                a, std::nullopt});
      continue;
    }
    ++hits[a];
    ++hits[b];
    out[a] = b;
    out[b] = a;
    edges.emplace_back(a, b);
  }
  for (VertexId v = 0; v < order; ++v) {
    if (hits[v] != 1) {
      pre.violations.push_back({HnViolationKind::kOutNeighbourCount,
                                vname(v) + " (cluster " + std::to_string(v / t) + ", local " +
                                    std::to_string(v % t) + ") has " + std::to_string(hits[v]) +
                                    " out-neighbours",
                                v, std::nullopt});
    }
  }
  if (!pre.ok()) throw CompositionError(std::move(pre));

  HierGraph h;
  h.graph = make_graph(order, std::span<const Edge>(edges), std::move(labels));
  h.cluster_count = t;
  h.cluster_order = t;
  h.base_degree = degree_profile(base).min_degree;
  h.out_neighbour = std::move(out);
  h.family = family;
  h.dimension = dimension;
  auto report = validate_hn(h);
  if (!report.ok()) throw CompositionError(std::move(report));
  return h;
}

Graph star_graph(std::size_t n, std::size_t budget) {
  if (n < 2) throw ArgumentError("star_graph needs n >= 2");
  const std::size_t order = factorial_capped(n);
  check_budget(order, budget);
  if (n > 9) throw ArgumentError("star_graph labels support n <= 9");
  auto perms = permutations(n);
  std::map<std::string, VertexId> index;
  for (VertexId i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < perms.size(); ++u) {
    for (std::size_t i = 2; i <= n; ++i) {
      const VertexId v = index.at(swap_first(perms[u], i));
      if (u < v) edges.emplace_back(u, v);
    }
  }
  const std::size_t count = perms.size();
  return make_graph(count, std::span<const Edge>(edges), std::move(perms));
}

Graph hypercube(std::size_t n, std::size_t budget) {
  if (n < 1) throw ArgumentError("hypercube needs n >= 1");
  check_budget(pow2_capped(n), budget);
  return cube_like(n, false);
}

Graph folded_hypercube(std::size_t n, std::size_t budget) {
  if (n < 2) throw ArgumentError("folded_hypercube needs n >= 2");
  check_budget(pow2_capped(n), budget);
  return cube_like(n, true);
}

HierGraph hs(std::size_t n, std::size_t budget) {
  if (n < 2) throw ArgumentError("hs needs n >= 2");
  check_budget(square_capped(factorial_capped(n)), budget);
  Graph base = star_graph(n, budget);
  const auto& names = base.labels();
  std::map<std::string, ClusterId> index;
  for (ClusterId i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  auto cross = two_level_cross(names.size(), [&](ClusterId c) { return index.at(swap_first(names[c], n)); });
  return compose_hn(base, cross, Family::kHs, n, two_level_labels(names));
}

HierGraph hcn(std::size_t n, std::size_t budget) {
  if (n < 2) throw ArgumentError("hcn needs n >= 2");
  check_budget(square_capped(pow2_capped(n)), budget);
  Graph base = hypercube(n, budget);
  const std::size_t t = base.order();
  auto cross = two_level_cross(t, [&](ClusterId c) { return static_cast<ClusterId>(c ^ (t - 1)); });
  return compose_hn(base, cross, Family::kHcn, n, two_level_labels(base.labels()));
}

HierGraph hfq(std::size_t n, std::size_t budget) {
  if (n < 2) throw ArgumentError("hfq needs n >= 2");
  check_budget(square_capped(pow2_capped(n)), budget);
  Graph base = folded_hypercube(n, budget);
  const std::size_t t = base.order();
  auto cross = two_level_cross(t, [&](ClusterId c) { return static_cast<ClusterId>(c ^ (t - 1)); });
  return compose_hn(base, cross, Family::kHfq, n, two_level_labels(base.labels()));
}

std::string two_tuple_label(const std::string& cluster, const std::string& position) {
  return "⟨" + cluster + "," + position + "⟩";
}

std::string normalize_label(std::string_view text) {
  std::string s(text);
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
    return "⟨" + s.substr(1, s.size() - 2) + "⟩";
  }
  return s;
}

}  // namespace hiernet
