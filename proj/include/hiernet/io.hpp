#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hiernet/graph.hpp"
#include "hiernet/menger.hpp"
#include "hiernet/packing.hpp"
#include "hiernet/stree.hpp"
#include "hiernet/topology.hpp"

namespace hiernet {

inline constexpr std::string_view kGraphFormat = "hiernet/1";
inline constexpr std::string_view kPackingFormat = "hiernet-packing/1";
inline constexpr std::string_view kCertificateFormat = "hiernet-certificate/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::json;

// Input text that does not follow one of the document schemas.
class FormatError : public Error {
 public:
  using Error::Error;
};

struct GraphDocument {
  Graph graph;
  std::optional<HierGraph> hierarchy;

  static GraphDocument plain(Graph g) { return {std::move(g), std::nullopt}; }
  static GraphDocument hier(HierGraph h) {
    Graph g = h.graph;
    return {std::move(g), std::move(h)};
  }
};

// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

Json graph_to_json(const GraphDocument& doc);
std::string emit_json(const GraphDocument& doc);
// Hierarchy blocks are re-validated; an invalid one throws CompositionError.
GraphDocument parse_graph_json(std::string_view text);

// Clusters become coloured subgraphs and cross edges are dashed.
std::string emit_dot(const GraphDocument& doc);

// "# order N" header, then one "u v" line per edge.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

Json packing_to_json(const STreePacking& p);
// Targets and trees only; vertex ids are checked against `order`.
STreePacking parse_packing_json(const Json& j, std::size_t order);

Json report_to_json(const PackingReport& r);
Json cut_to_json(const CutWitness& c);
Json case_to_json(const CaseTag& tag);

std::string sha256_hex(std::string_view data);

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::optional<std::uint64_t> seed;
  std::string tool_version{kToolVersion};
  std::uint64_t wall_time_ms = 0;
  std::string result_digest;

  Json to_json() const;
};

// Attaches a manifest whose digest covers the canonical form of `result`.
Json with_manifest(Json result, RunManifest manifest);

}  // namespace hiernet
