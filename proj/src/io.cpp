#include "hiernet/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <sstream>

namespace hiernet {

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json graph_to_json(const GraphDocument& doc) {
  Json j;
  j["format"] = kGraphFormat;
  j["order"] = doc.graph.order();
  Json edges = Json::array();
  for (const auto& e : doc.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (doc.graph.has_labels()) j["labels"] = doc.graph.labels();
  if (doc.hierarchy) {
    const auto& h = *doc.hierarchy;
    j["hierarchy"] = {{"family", to_string(h.family)},
                      {"dimension", h.dimension},
                      {"cluster_count", h.cluster_count},
                      {"cluster_order", h.cluster_order},
                      {"base_degree", h.base_degree},
                      {"out_neighbour", h.out_neighbour}};
  }
  return j;
}

std::string emit_json(const GraphDocument& doc) { return canonical_dump(graph_to_json(doc)); }

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

EdgeSet parse_tree(const Json& j, std::size_t order) {
  if (!j.is_array()) throw FormatError("tree must be an array of [u, v] pairs");
  std::vector<Edge> edges;
  for (const auto& pair : j) {
    auto non_negative = [](const Json& x) { return x.is_number_integer() && x.get<std::int64_t>() >= 0; };
    if (!pair.is_array() || pair.size() != 2 || !non_negative(pair[0]) || !non_negative(pair[1])) {
      throw FormatError("edge must be a pair of non-negative integers");
    }
    const auto u = pair[0].get<std::uint64_t>(), v = pair[1].get<std::uint64_t>();
    if (u >= order || v >= order) {
      throw ArgumentError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a vertex >= order " +
                          std::to_string(order));
    }
    if (u == v) throw FormatError("edge is a self-loop at " + std::to_string(u));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return EdgeSet(std::move(edges));
}

}  // namespace

GraphDocument parse_graph_json(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) throw FormatError("graph document must be a JSON object");
  if (field<std::string>(j, "format") != kGraphFormat) {
    throw FormatError("unsupported format \"" + j["format"].get<std::string>() + "\"");
  }
  const auto order = field<std::size_t>(j, "order");
  const auto raw = field<std::vector<std::vector<std::uint64_t>>>(j, "edges");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& pair : raw) {
    if (pair.size() != 2) throw FormatError("edge entries must have two endpoints");
    if (pair[0] >= order || pair[1] >= order || pair[0] == pair[1]) {
      throw FormatError("edge [" + std::to_string(pair[0]) + "," + std::to_string(pair[1]) + "] is invalid for order " +
                        std::to_string(order));
    }
    edges.emplace_back(static_cast<VertexId>(pair[0]), static_cast<VertexId>(pair[1]));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  GraphDocument doc;
  try {
    doc.graph = make_graph(order, std::span<const Edge>(edges), std::move(labels));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
  if (j.contains("hierarchy")) {
    const Json& hj = j["hierarchy"];
    HierGraph h;
    h.graph = doc.graph;
    const auto family = parse_family(field<std::string>(hj, "family"));
    if (!family) throw FormatError("unknown family \"" + hj["family"].get<std::string>() + "\"");
    h.family = *family;
    h.dimension = field<std::size_t>(hj, "dimension");
    h.cluster_count = field<std::size_t>(hj, "cluster_count");
    h.cluster_order = field<std::size_t>(hj, "cluster_order");
    h.base_degree = field<std::size_t>(hj, "base_degree");
    h.out_neighbour = field<std::vector<VertexId>>(hj, "out_neighbour");
    if (auto report = validate_hn(h); !report.ok()) throw CompositionError(std::move(report));
    doc.hierarchy = std::move(h);
  }
  return doc;
}

std::string emit_dot(const GraphDocument& doc) {
  static constexpr std::array<const char*, 10> kPalette = {
      "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4", "gold3", "gray40"};
  const Graph& g = doc.graph;
  std::ostringstream out;
  auto node = [&](VertexId v) {
    out << "    " << v << " [label=\"" << g.label(v) << "\"];\n";
  };
  out << "graph hiernet {\n  node [shape=ellipse, fontsize=10];\n";
  if (doc.hierarchy) {
    const auto& h = *doc.hierarchy;
    for (ClusterId c = 0; c < h.cluster_count; ++c) {
      const char* colour = kPalette[c % kPalette.size()];
      out << "  subgraph cluster_" << c << " {\n    label=\"cluster " << c << "\";\n    color=" << colour
          << ";\n    node [color=" << colour << "];\n";
      for (VertexId v : h.cluster_vertices(c)) node(v);
      out << "  }\n";
    }
    for (const auto& e : g.edges()) {
      out << "  " << e.u << " -- " << e.v;
      if (h.cluster_of(e.u) != h.cluster_of(e.v)) out << " [style=dashed]";
      out << ";\n";
    }
  } else {
    for (VertexId v = 0; v < g.order(); ++v) node(v);
    for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string word;
      std::size_t n = 0;
      if (header >> word >> n && word == "order") order = n;
      continue;
    }
    if (!order) throw FormatError("edge list needs a \"# order N\" header before the first edge");
    std::istringstream row(line);
    std::uint64_t u = 0, v = 0;
    if (!(row >> u >> v)) throw FormatError("bad edge line \"" + line + "\"");
    if (u >= *order || v >= *order || u == v) throw FormatError("invalid edge \"" + line + "\"");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (!order) throw FormatError("edge list needs a \"# order N\" header");
  return make_graph(*order, std::span<const Edge>(edges));
}

Json packing_to_json(const STreePacking& p) {
  Json trees = Json::array();
  for (const auto& t : p.trees) {
    Json edges = Json::array();
    for (const auto& e : t) edges.push_back({e.u, e.v});
    trees.push_back(std::move(edges));
  }
  return {{"format", kPackingFormat}, {"targets", p.targets}, {"trees", std::move(trees)}};
}

STreePacking parse_packing_json(const Json& j, std::size_t order) {
  if (!j.is_object()) throw FormatError("packing document must be a JSON object");
  if (field<std::string>(j, "format") != kPackingFormat) throw FormatError("not a packing document");
  const auto targets = field<std::vector<std::uint64_t>>(j, "targets");
  if (targets.size() != 3) throw FormatError("packing needs exactly three targets");
  STreePacking p;
  for (std::size_t i = 0; i < 3; ++i) {
    if (targets[i] >= order) {
      throw ArgumentError("target " + std::to_string(targets[i]) + " is >= order " + std::to_string(order));
    }
    p.targets[i] = static_cast<VertexId>(targets[i]);
  }
  if (!j.contains("trees") || !j["trees"].is_array()) throw FormatError("missing \"trees\" array");
  for (const auto& t : j["trees"]) p.trees.push_back(parse_tree(t, order));
  return p;
}

Json report_to_json(const PackingReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item = {{"kind", to_string(v.kind)}, {"trees", v.trees}, {"detail", v.detail}};
    if (v.vertex) item["vertex"] = *v.vertex;
    if (v.edge) item["edge"] = {v.edge->u, v.edge->v};
    violations.push_back(std::move(item));
  }
  return {{"verdict", r.valid() ? "valid" : "invalid"}, {"violations", std::move(violations)}};
}

Json cut_to_json(const CutWitness& c) {
  Json j = {{"separator", c.separator}, {"side_a", c.side_a}, {"side_b", c.side_b}};
  if (c.direct_edge) j["direct_edge"] = {c.direct_edge->u, c.direct_edge->v};
  return j;
}

Json case_to_json(const CaseTag& tag) { return {{"kind", to_string(tag.kind)}, {"clusters", tag.clusters}}; }

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error("sha256: cannot allocate digest context");
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, digest.data(), &length) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw Error("sha256: digest failed");
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json RunManifest::to_json() const {
  Json j = {{"command", command},
            {"parameters", parameters},
            {"tool_version", tool_version},
            {"wall_time_ms", wall_time_ms},
            {"result_digest", result_digest}};
  if (seed) j["seed"] = *seed;
  return j;
}

Json with_manifest(Json result, RunManifest manifest) {
  manifest.result_digest = sha256_hex(canonical_dump(result));
  result["manifest"] = manifest.to_json();
  return result;
}

}  // namespace hiernet
