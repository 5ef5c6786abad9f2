#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hiernet/graph.hpp"
#include "hiernet/packing.hpp"
#include "hiernet/topology.hpp"

namespace hiernet {

// How the three targets are spread over clusters.
enum class CaseKind { kSameCluster, kTwoClusters, kThreeClusters };

std::string to_string(CaseKind kind);

struct CaseTag {
  CaseKind kind = CaseKind::kSameCluster;
  // Distinct clusters hosting the targets. For kTwoClusters the cluster with
  // two targets comes first.
  std::vector<ClusterId> clusters;

  bool operator==(const CaseTag&) const = default;
};

struct BuiltPacking {
  STreePacking packing;
  CaseTag tag;
};

// The composition does not satisfy t >= d + 3; use the exact oracle instead.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The bounded search for in-cluster trees ran out of nodes.
class SearchBudgetError : public Error {
 public:
  SearchBudgetError(std::string what, std::uint64_t nodes) : Error(std::move(what)), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

CaseTag classify(const HierGraph& h, const Triple& targets);

// d = base_degree pairwise internally edge-disjoint trees spanning `targets`,
// validated before return. Throws PreconditionError when t < d + 3,
// ArgumentError for repeated or out-of-range targets, CompositionError when h
// fails validate_hn.
BuiltPacking build_strees(const HierGraph& h, const Triple& targets,
                          std::uint64_t search_budget = kDefaultSearchBudget);

// d - 1 trees inside the shared cluster plus one tree through the three
// out-neighbours outside it.
STreePacking case_same_cluster(const HierGraph& h, const Triple& targets,
                               std::uint64_t search_budget = kDefaultSearchBudget);

// Two targets x, y share a cluster C: d disjoint x-y paths in C, each leaving
// C through the out-neighbour of x's successor, joined to z by a d-fan in
// the graph without C.
STreePacking case_two_clusters(const HierGraph& h, const Triple& targets);

// Targets in three clusters: per intermediate cluster M_i, one cross edge to
// each host cluster, a fan inside each host to its anchors, and a Steiner
// tree inside M_i.
STreePacking case_three_clusters(const HierGraph& h, const Triple& targets);

// Union of shortest paths from the first terminal, reduced to a tree whose
// leaves are terminals. Not necessarily minimum. Throws GraphError when a
// terminal is unreachable and ArgumentError for an empty terminal list.
EdgeSet steiner_tree_connect(const Graph& g, std::span<const VertexId> terminals);

// Budget-bounded search for r trees inside a base graph.
PackSearchResult base_cluster_pack(const Graph& g, const Triple& targets, std::size_t r,
                                   std::uint64_t budget = kDefaultSearchBudget);

}  // namespace hiernet
