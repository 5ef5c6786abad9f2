#include "hiernet/commands.hpp"

#include <algorithm>
#include <charconv>

namespace hiernet {

namespace {

Json parse_json_text(std::string_view text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) return std::nullopt;
  return value;
}

std::uint64_t require_uint(std::string_view token, const char* what) {
  auto value = parse_uint(token);
  if (!value) throw ArgumentError(std::string(what) + " must be a non-negative integer, got \"" + std::string(token) + "\"");
  return *value;
}

Json trees_to_json(const std::vector<EdgeSet>& trees) {
  Json out = Json::array();
  for (const auto& t : trees) {
    Json edges = Json::array();
    for (const auto& e : t) edges.push_back({e.u, e.v});
    out.push_back(std::move(edges));
  }
  return out;
}

Triple resolve_triple(const Graph& g, const std::vector<std::string>& tokens) {
  if (tokens.size() != 3) throw ArgumentError("exactly three target vertices are required");
  Triple t{};
  for (std::size_t i = 0; i < 3; ++i) t[i] = resolve_vertex(g, tokens[i]);
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
    throw ArgumentError("target vertices must be distinct");
  }
  return t;
}

Json base_certificate(const std::string& mode) {
  return {{"format", kCertificateFormat}, {"mode", mode}};
}

void set_status(Json& doc, bool exact, std::size_t lower, std::size_t upper) {
  doc["status"] = exact ? "exact" : "unknown";
  doc["lower"] = lower;
  doc["upper"] = upper;
  doc["value"] = exact ? Json(lower) : Json(nullptr);
}

// Exact results must equal the expectation; an abstention only fails when
// the expectation already lies outside the proven bounds.
int expect_exit(const OracleRequest& req, bool exact, std::size_t lower, std::size_t upper, std::string& message) {
  if (!req.expect) return kExitOk;
  const std::size_t want = *req.expect;
  const bool mismatch = exact ? lower != want : (want < lower || want > upper);
  if (!mismatch) return kExitOk;
  message = "expected " + std::to_string(want) + ", got " +
            (exact ? std::to_string(lower) : "unknown in [" + std::to_string(lower) + ", " + std::to_string(upper) + "]");
  return kExitSemantic;
}

}  // namespace

HierGraph parse_compose_spec(std::string_view text) {
  const Json j = parse_json_text(text, "compose spec");
  if (!j.is_object() || !j.contains("base") || !j.contains("cross")) {
    throw FormatError("compose spec needs \"base\" and \"cross\"");
  }
  const Json& base = j["base"];
  std::vector<Edge> edges;
  std::size_t order = 0;
  std::vector<CrossEdge> cross;
  std::vector<std::string> labels;
  try {
    order = base.at("order").get<std::size_t>();
    for (const auto& pair : base.at("edges")) {
      const auto u = pair.at(0).get<std::uint64_t>(), v = pair.at(1).get<std::uint64_t>();
      if (u >= order || v >= order || u == v) throw FormatError("invalid base edge " + pair.dump());
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    for (const auto& item : j["cross"]) {
      CrossEdge c;
      c.a = {item.at(0).at(0).get<ClusterId>(), item.at(0).at(1).get<VertexId>()};
      c.b = {item.at(1).at(0).get<ClusterId>(), item.at(1).at(1).get<VertexId>()};
      cross.push_back(c);
    }
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("compose spec: ") + e.what());
  }
  return compose_hn(make_graph(order, std::span<const Edge>(edges)), cross, Family::kCustom, 0, std::move(labels));
}

CommandOutput cmd_gen(const GenRequest& req) {
  GraphDocument doc;
  const std::size_t budget = req.max_vertices;
  const std::string& f = req.family;
  if (f == "hs") {
    doc = GraphDocument::hier(hs(req.n, budget));
  } else if (f == "hcn") {
    doc = GraphDocument::hier(hcn(req.n, budget));
  } else if (f == "hfq") {
    doc = GraphDocument::hier(hfq(req.n, budget));
  } else if (f == "star") {
    doc = GraphDocument::plain(star_graph(req.n, budget));
  } else if (f == "cube") {
    doc = GraphDocument::plain(hypercube(req.n, budget));
  } else if (f == "folded") {
    doc = GraphDocument::plain(folded_hypercube(req.n, budget));
  } else if (f == "compose") {
    auto h = parse_compose_spec(req.spec_text);
    if (h.graph.order() > budget) throw BudgetError(h.graph.order(), budget);
    doc = GraphDocument::hier(std::move(h));
  } else {
    throw ArgumentError("unknown family \"" + f + "\"; expected hs, hcn, hfq, star, cube, folded or compose");
  }
  CommandOutput out;
  switch (req.format) {
    case OutputFormat::kJson:
      out.document = graph_to_json(doc);
      break;
    case OutputFormat::kDot:
      out.text = emit_dot(doc);
      break;
    case OutputFormat::kEdges:
      out.text = emit_edge_list(doc.graph);
      break;
  }
  out.message = std::to_string(doc.graph.order()) + " vertices, " + std::to_string(doc.graph.edge_count()) + " edges";
  return out;
}

VertexId resolve_vertex(const Graph& g, std::string_view token) {
  if (auto id = parse_uint(token)) {
    if (*id >= g.order()) {
      throw ArgumentError("vertex " + std::to_string(*id) + " is out of range for order " + std::to_string(g.order()));
    }
    return static_cast<VertexId>(*id);
  }
  if (auto v = g.find_label(normalize_label(token))) return *v;
  throw ArgumentError("unknown vertex \"" + std::string(token) + "\"");
}

CommandOutput cmd_strees(std::string_view graph_text, const std::vector<std::string>& targets,
                         std::uint64_t search_budget) {
  const GraphDocument doc = parse_graph_json(graph_text);
  if (!doc.hierarchy) throw ArgumentError("not a hierarchical graph: the document has no hierarchy block");
  const HierGraph& h = *doc.hierarchy;
  const Triple s = resolve_triple(h.graph, targets);
  if (!h.construction_applies()) {
    throw PreconditionError("cluster count " + std::to_string(h.cluster_count) + " is below base degree + 3 = " +
                            std::to_string(h.base_degree + 3) + "; run `oracle <graph> kappaS x y z` instead");
  }
  const BuiltPacking built = build_strees(h, s, search_budget);
  const PackingReport report = validate_packing(h.graph, built.packing);
  CommandOutput out;
  out.document = packing_to_json(built.packing);
  out.document["case"] = case_to_json(built.tag);
  out.document["report"] = report_to_json(report);
  out.exit_code = report.valid() ? kExitOk : kExitSemantic;
  out.message = std::to_string(built.packing.trees.size()) + " trees, " + to_string(built.tag.kind) + ", " +
                (report.valid() ? "valid" : report.summary());
  return out;
}

CommandOutput cmd_oracle(std::string_view graph_text, const OracleRequest& req) {
  const GraphDocument doc = parse_graph_json(graph_text);
  const Graph& g = doc.graph;
  CommandOutput out;
  Json cert = base_certificate(req.mode);
  cert["budget"] = req.budget;
  if (req.mode == "kappa") {
    if (!req.args.empty()) throw ArgumentError("kappa takes no extra arguments");
    const ConnectivityResult r = vertex_connectivity(g);
    set_status(cert, true, r.kappa, r.kappa);
    cert["exhausted"] = true;
    cert["complete_graph"] = r.complete_graph;
    if (r.witness) cert["cut"] = cut_to_json(*r.witness);
    if (r.pair) {
      cert["pair"] = {r.pair->first, r.pair->second};
      const PathsResult paths = disjoint_paths(g, r.pair->first, r.pair->second, r.kappa + 1);
      cert["paths"] = paths.family.paths;
    }
    out.exit_code = expect_exit(req, true, r.kappa, r.kappa, out.message);
  } else if (req.mode == "kappa3-exhaustive" || req.mode == "kappa3-sample") {
    Kappa3Mode mode = Kappa3Mode::all();
    if (req.mode == "kappa3-sample") {
      if (req.args.size() != 2) throw ArgumentError("kappa3-sample needs <k> <seed>");
      const auto k = require_uint(req.args[0], "sample size");
      const auto seed = require_uint(req.args[1], "seed");
      if (k == 0) throw ArgumentError("sample size must be positive");
      mode = Kappa3Mode::sample(k, seed);
      cert["sample_count"] = k;
      cert["seed"] = seed;
    } else if (!req.args.empty()) {
      throw ArgumentError("kappa3-exhaustive takes no extra arguments");
    }
    if (g.order() < 3) throw ArgumentError("graph has fewer than three vertices");
    const Kappa3Certificate c = kappa3_exact(g, mode, req.budget, std::max<std::size_t>(1, req.jobs));
    set_status(cert, c.exact, c.lower, c.value);
    cert["exhausted"] = c.exhausted;
    cert["examined"] = c.examined;
    cert["nodes"] = c.nodes;
    if (c.minimizing) cert["minimizing"] = *c.minimizing;
    cert["packing"] = trees_to_json(c.packing);
    out.exit_code = expect_exit(req, c.exact, c.lower, c.value, out.message);
  } else if (req.mode == "kappaS") {
    const Triple s = resolve_triple(g, req.args);
    const KappaSResult r = kappa_S_exact(g, s, packing_upper_bound(g, s), req.budget);
    set_status(cert, r.exact, r.value, r.upper);
    cert["exhausted"] = true;
    cert["targets"] = s;
    cert["nodes"] = r.nodes;
    cert["packing"] = trees_to_json(r.trees);
    out.exit_code = expect_exit(req, r.exact, r.value, r.upper, out.message);
  } else {
    throw ArgumentError("unknown oracle mode \"" + req.mode + "\"");
  }
  if (cert["status"] == "unknown") {
    cert["at_least"] = cert["lower"];
    if (out.message.empty()) out.message = "search budget exhausted: unknown, at least " + cert["lower"].dump();
  }
  out.document = std::move(cert);
  return out;
}

CommandOutput cmd_verify(std::string_view graph_text, std::string_view packing_text) {
  const GraphDocument doc = parse_graph_json(graph_text);
  const STreePacking p = parse_packing_json(parse_json_text(packing_text, "packing"), doc.graph.order());
  const PackingReport report = validate_packing(doc.graph, p);
  CommandOutput out;
  out.document = report_to_json(report);
  out.document["targets"] = p.targets;
  out.document["tree_count"] = p.trees.size();
  out.exit_code = report.valid() ? kExitOk : kExitSemantic;
  out.message = report.valid() ? "valid" : report.summary();
  return out;
}

CommandOutput guarded(const std::function<CommandOutput()>& body) {
  auto fail = [](int code, const std::exception& e) {
    CommandOutput out;
    out.exit_code = code;
    out.message = std::string("error: ") + e.what();
    return out;
  };
  try {
    return body();
  } catch (const PreconditionError& e) {
    return fail(kExitPrecondition, e);
  } catch (const SearchBudgetError& e) {
    return fail(kExitSemantic, e);
  } catch (const InvariantError& e) {
    return fail(kExitSemantic, e);
  } catch (const Error& e) {
    return fail(kExitInput, e);
  } catch (const Json::exception& e) {
    return fail(kExitInput, e);
  }
}

}  // namespace hiernet
