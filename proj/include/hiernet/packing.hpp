#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hiernet/graph.hpp"

namespace hiernet {

using Triple = std::array<VertexId, 3>;

// A target 3-set plus trees that should pairwise meet only in the targets.
struct STreePacking {
  Triple targets{};
  std::vector<EdgeSet> trees;

  bool operator==(const STreePacking&) const = default;
};

enum class PackingViolationKind { kNotATree, kMissingTarget, kSharedVertex, kSharedEdge };

std::string to_string(PackingViolationKind kind);

struct PackingViolation {
  PackingViolationKind kind;
  std::vector<std::size_t> trees;  // offending tree indices
  std::optional<VertexId> vertex;
  std::optional<Edge> edge;
  std::string detail;
};

struct PackingReport {
  std::vector<PackingViolation> violations;

  bool valid() const { return violations.empty(); }
  bool has(PackingViolationKind kind) const;
  std::string summary() const;
};

// Checks every tree and every pair of trees; reports all violations.
PackingReport validate_packing(const Graph& g, std::span<const VertexId> targets,
                               const std::vector<EdgeSet>& trees);
inline PackingReport validate_packing(const Graph& g, const STreePacking& p) {
  return validate_packing(g, p.targets, p.trees);
}

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

enum class SearchStatus { kFound, kInfeasible, kBudgetExhausted };

std::string to_string(SearchStatus status);

struct PackSearchResult {
  SearchStatus status = SearchStatus::kInfeasible;
  std::vector<EdgeSet> trees;
  std::uint64_t nodes = 0;
};

// Backtracking search for `count` internally edge-disjoint trees spanning
// `targets`. Trees are enumerated as minimal trees (every leaf a target) with
// iterative deepening on the number of non-target vertices used. kInfeasible
// is only reported once the search space is exhausted.
PackSearchResult search_packing(const Graph& g, const Triple& targets, std::size_t count,
                                std::uint64_t budget = kDefaultSearchBudget);

// Cheap upper bound on the number of internally edge-disjoint trees for
// `targets`: target degrees, adjacent saturated targets, and pairwise
// path capacities.
std::size_t packing_upper_bound(const Graph& g, const Triple& targets);

struct KappaSResult {
  bool exact = false;         // false: value is only a lower bound
  std::size_t value = 0;
  std::size_t upper = 0;      // best upper bound established
  std::vector<EdgeSet> trees; // certificate packing of size `value`
  std::uint64_t nodes = 0;
};

// Maximum number of internally edge-disjoint trees spanning `targets`, capped
// at `upper`. Each search attempt gets `budget` nodes; when one runs dry the
// result is "unknown, at least value" rather than a guess.
KappaSResult kappa_S_exact(const Graph& g, const Triple& targets, std::size_t upper,
                           std::uint64_t budget = kDefaultSearchBudget);

struct Kappa3Mode {
  bool exhaustive = true;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;

  static Kappa3Mode all() { return {}; }
  static Kappa3Mode sample(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

struct Kappa3Certificate {
  bool exact = false;             // lower == value over the examined sets
  std::size_t value = 0;          // minimum upper bound over examined sets
  std::size_t lower = 0;          // minimum lower bound over examined sets
  std::optional<Triple> minimizing;
  std::vector<EdgeSet> packing;   // certificate for `minimizing`
  bool exhausted = false;         // every 3-set was examined
  std::size_t examined = 0;
  std::uint64_t nodes = 0;
};

// Generalized 3-connectivity over all 3-sets, or over a seeded sample.
// `jobs` > 1 evaluates 3-sets on worker threads; output does not depend on it.
Kappa3Certificate kappa3_exact(const Graph& g, const Kappa3Mode& mode,
                               std::uint64_t budget = kDefaultSearchBudget, std::size_t jobs = 1);

// Seeded 3-set sample, sorted lexicographically, duplicates removed.
std::vector<Triple> sample_triples(std::size_t order, std::size_t count, std::uint64_t seed);

// delta - 1 when some edge joins two minimum-degree vertices.
std::optional<std::size_t> bound_upper_adjacent_min_degree(const Graph& g);

// With kappa = 4k + r, r in [0, 3]: 3k + ceil(r / 2).
std::size_t bound_lower_from_kappa(std::size_t kappa);

}  // namespace hiernet
