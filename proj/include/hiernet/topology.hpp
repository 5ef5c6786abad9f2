#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hiernet/graph.hpp"

namespace hiernet {

using ClusterId = std::uint32_t;

// Requested graph would exceed the configured vertex budget.
class BudgetError : public Error {
 public:
  BudgetError(std::size_t required, std::size_t budget);
  std::size_t required() const { return required_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

inline constexpr std::size_t kDefaultVertexBudget = 20000;

// kDefaultVertexBudget unless HIERNET_MAX_VERTICES holds a positive integer.
std::size_t default_vertex_budget();

enum class Family { kHs, kHcn, kHfq, kCustom };

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

// Hierarchical composition of t copies of a d-regular base graph on t
// vertices joined by a perfect matching of cross edges.
//
// Vertex layout: id = cluster * cluster_order + local.
struct HierGraph {
  Graph graph;
  std::size_t cluster_count = 0;
  std::size_t cluster_order = 0;
  std::size_t base_degree = 0;
  std::vector<VertexId> out_neighbour;
  Family family = Family::kCustom;
  std::size_t dimension = 0;  // n for the named families, 0 for custom

  ClusterId cluster_of(VertexId v) const { return static_cast<ClusterId>(v / cluster_order); }
  VertexId local_of(VertexId v) const { return static_cast<VertexId>(v % cluster_order); }
  VertexId vertex(ClusterId c, VertexId local) const {
    return static_cast<VertexId>(c * cluster_order + local);
  }
  std::vector<VertexId> cluster_vertices(ClusterId c) const;

  // Precondition of the edge-disjoint tree construction: t >= d + 3.
  bool construction_applies() const { return cluster_count >= base_degree + 3; }

  bool operator==(const HierGraph&) const = default;
};

enum class HnViolationKind {
  kOrderMismatch,        // cluster_order != cluster_count, or |V| != t * t
  kMapSize,              // out_neighbour table has the wrong length
  kOutNeighbourCount,    // vertex with 0 or >= 2 neighbours outside its cluster
  kOutNeighbourMismatch, // map entry is not the vertex's actual outside neighbour
  kSameCluster,          // map entry lies in the vertex's own cluster
  kNotInvolution,        // out(out(x)) != x or out(x) == x
  kCrossCount,           // cluster pair joined by 0 or >= 3 cross edges
  kCrossTotal,           // cross edge total != t^2 / 2
  kClusterNotRegular,    // cluster-induced degree != d
  kNotRegular,           // full-graph degree != d + 1
};

std::string to_string(HnViolationKind kind);

struct HnViolation {
  HnViolationKind kind;
  std::string detail;
  std::optional<VertexId> vertex;
  std::optional<std::pair<ClusterId, ClusterId>> clusters;
};

struct HnReport {
  std::vector<HnViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Exhaustive check of the composition invariants. Violations are data.
HnReport validate_hn(const HierGraph& h);

class CompositionError : public Error {
 public:
  explicit CompositionError(HnReport report);
  const HnReport& report() const { return report_; }

 private:
  HnReport report_;
};

struct ClusterVertex {
  ClusterId cluster = 0;
  VertexId local = 0;
};

struct CrossEdge {
  ClusterVertex a;
  ClusterVertex b;
};

// Builds t disjoint copies of `base` plus the given cross edges and verifies
// every composition invariant. Throws CompositionError naming each violation.
HierGraph compose_hn(const Graph& base, const std::vector<CrossEdge>& cross,
                     Family family = Family::kCustom, std::size_t dimension = 0,
                     std::vector<std::string> labels = {});

// Building blocks. Each throws BudgetError when the vertex count exceeds
// `budget` and ArgumentError when n is out of range.
Graph star_graph(std::size_t n, std::size_t budget = default_vertex_budget());
Graph hypercube(std::size_t n, std::size_t budget = default_vertex_budget());
Graph folded_hypercube(std::size_t n, std::size_t budget = default_vertex_budget());

HierGraph hs(std::size_t n, std::size_t budget = default_vertex_budget());
HierGraph hcn(std::size_t n, std::size_t budget = default_vertex_budget());
HierGraph hfq(std::size_t n, std::size_t budget = default_vertex_budget());

// Label helpers for two-tuple addresses.
std::string two_tuple_label(const std::string& cluster, const std::string& position);
// Maps ASCII "<c,p>" to the canonical "⟨c,p⟩" form; other text passes through.
std::string normalize_label(std::string_view text);

}  // namespace hiernet
