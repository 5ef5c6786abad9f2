#pragma once

#include <optional>
#include <vector>

#include "hiernet/graph.hpp"

namespace hiernet {

// Internally disjoint paths out of one source. In the paths case every path
// ends at the single target; in the fan case each ends at a distinct member
// of the target set.
struct PathFamily {
  VertexId source = 0;
  std::vector<VertexId> targets;
  bool fan = false;
  std::vector<std::vector<VertexId>> paths;

  std::size_t size() const { return paths.size(); }
};

// Removing `separator` (and `direct_edge`, when present) leaves no path from
// side_a to side_b.
struct CutWitness {
  std::vector<VertexId> separator;
  std::vector<VertexId> side_a;
  std::vector<VertexId> side_b;
  std::optional<Edge> direct_edge;
};

struct PathsResult {
  PathFamily family;
  std::optional<CutWitness> cut;  // present iff fewer than k paths exist

  bool complete() const { return !cut.has_value(); }
};

// Up to k internally disjoint x-y paths. When fewer exist the maximum family
// is returned together with a cut of that size. A direct xy edge counts as one
// path. Throws ArgumentError for k == 0 or x == y.
PathsResult disjoint_paths(const Graph& g, VertexId x, VertexId y, std::size_t k);

// Up to k paths from x to distinct members of `targets`, pairwise sharing only
// x, each meeting `targets` only at its last vertex. Throws ArgumentError when
// |targets| < k, k == 0, or x is itself a target.
PathsResult k_fan(const Graph& g, VertexId x, const std::vector<VertexId>& targets, std::size_t k);

struct ConnectivityResult {
  std::size_t kappa = 0;
  bool complete_graph = false;
  std::optional<CutWitness> witness;          // minimum separator unless complete
  std::optional<std::pair<VertexId, VertexId>> pair;  // the pair it separates
};

enum class PairStrategy {
  kAuto,         // all non-adjacent pairs below 64 vertices, otherwise kNeighbourhood
  kAllPairs,
  kNeighbourhood // one min-degree vertex v: v vs non-neighbours, plus non-adjacent pairs in N(v)
};

// Exact vertex connectivity. Throws ArgumentError for graphs with < 2 vertices.
ConnectivityResult vertex_connectivity(const Graph& g, PairStrategy strategy = PairStrategy::kAuto);

// Checks the PathFamily invariants against g; empty string when valid.
std::string check_path_family(const Graph& g, const PathFamily& family);

// Checks that removing the witness separates its two sides; empty when valid.
std::string check_cut(const Graph& g, const CutWitness& cut);

}  // namespace hiernet
