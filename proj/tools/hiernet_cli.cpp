// hiernet: generate hierarchical networks, build edge-disjoint S-trees,
// run the exact oracle and verify packings.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hiernet/commands.hpp"

namespace {

using hiernet::CommandOutput;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hiernet::ArgumentError("cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const CommandOutput& out, const std::string& path) {
  if (!out.document.is_null() || out.text) {
    const std::string body = out.rendered();
    if (path.empty() || path == "-") {
      std::cout << body;
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << body)) {
        std::cerr << "error: cannot write \"" << path << "\"\n";
        return hiernet::kExitInput;
      }
    }
  }
  if (!out.message.empty()) std::cerr << out.message << "\n";
  return out.exit_code;
}

// Result documents carry a manifest; graph documents stay bare so they
// round-trip through parse/emit.
CommandOutput with_run_manifest(CommandOutput out, const std::string& command, hiernet::Json parameters,
                                std::optional<std::uint64_t> seed, std::chrono::steady_clock::time_point start) {
  if (out.document.is_null()) return out;
  hiernet::RunManifest m;
  m.command = command;
  m.parameters = std::move(parameters);
  m.seed = seed;
  m.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  out.document = hiernet::with_manifest(std::move(out.document), std::move(m));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical network topologies and internally edge-disjoint S-trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hiernet::kToolVersion));

  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Generate a topology");
  std::string family, spec_path, format = "json";
  std::size_t n = 0, max_vertices = hiernet::default_vertex_budget();
  gen->add_option("family", family, "hs|hcn|hfq|star|cube|folded|compose")->required();
  gen->add_option("n", n, "Dimension");
  gen->add_option("--spec", spec_path, "Compose spec file (compose only)");
  gen->add_option("-o,--output", out_path, "Output path (stdout when omitted)");
  gen->add_option("--format", format, "json|dot|edges")->check(CLI::IsMember({"json", "dot", "edges"}));
  gen->add_option("--max-vertices", max_vertices, "Vertex budget (env HIERNET_MAX_VERTICES)");

  auto* strees = app.add_subcommand("strees", "Build d internally edge-disjoint S-trees");
  std::string graph_path;
  std::vector<std::string> targets;
  std::uint64_t budget = hiernet::kDefaultSearchBudget;
  strees->add_option("graph", graph_path, "Graph document")->required();
  strees->add_option("targets", targets, "Three vertex ids or labels")->required()->expected(3);
  strees->add_option("-o,--output", out_path, "Output path");
  strees->add_option("--budget", budget, "Search node budget for in-cluster trees");

  auto* oracle = app.add_subcommand("oracle", "Exact connectivity oracle");
  std::string mode;
  std::vector<std::string> mode_args;
  std::size_t jobs = 1;
  std::optional<std::size_t> expect;
  oracle->add_option("graph", graph_path, "Graph document")->required();
  oracle->add_option("mode", mode, "kappa|kappa3-exhaustive|kappa3-sample|kappaS")
      ->required()
      ->check(CLI::IsMember({"kappa", "kappa3-exhaustive", "kappa3-sample", "kappaS"}));
  oracle->add_option("args", mode_args, "kappa3-sample: <k> <seed>; kappaS: <x> <y> <z>");
  oracle->add_option("--budget", budget, "Search node budget per attempt");
  oracle->add_option("--jobs", jobs, "Worker threads for kappa3")->check(CLI::PositiveNumber);
  oracle->add_option("--expect", expect, "Exit 1 unless the value matches");
  oracle->add_option("-o,--output", out_path, "Output path");

  auto* verify = app.add_subcommand("verify", "Validate a packing document");
  std::string packing_path;
  verify->add_option("graph", graph_path, "Graph document")->required();
  verify->add_option("packing", packing_path, "Packing document")->required();
  verify->add_option("-o,--output", out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hiernet::kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandOutput out;
  if (*gen) {
    out = hiernet::guarded([&] {
      hiernet::GenRequest req;
      req.family = family;
      req.n = n;
      req.max_vertices = max_vertices;
      req.format = format == "dot" ? hiernet::OutputFormat::kDot
                   : format == "edges" ? hiernet::OutputFormat::kEdges
                                       : hiernet::OutputFormat::kJson;
      if (family == "compose") {
        if (spec_path.empty()) throw hiernet::ArgumentError("gen compose needs --spec <file>");
        req.spec_text = read_file(spec_path);
      } else if (gen->count("n") == 0) {
        throw hiernet::ArgumentError("gen " + family + " needs a dimension n");
      }
      return hiernet::cmd_gen(req);
    });
  } else if (*strees) {
    out = hiernet::guarded([&] {
      auto result = hiernet::cmd_strees(read_file(graph_path), targets, budget);
      return with_run_manifest(std::move(result), "strees", {{"targets", targets}, {"budget", budget}}, std::nullopt,
                               start);
    });
  } else if (*oracle) {
    out = hiernet::guarded([&] {
      hiernet::OracleRequest req{mode, mode_args, budget, jobs, expect};
      auto result = hiernet::cmd_oracle(read_file(graph_path), req);
      std::optional<std::uint64_t> seed;
      if (result.document.contains("seed")) seed = result.document["seed"].get<std::uint64_t>();
      hiernet::Json params = {{"mode", mode}, {"args", mode_args}, {"budget", budget}};
      if (expect) params["expect"] = *expect;
      return with_run_manifest(std::move(result), "oracle", std::move(params), seed, start);
    });
  } else if (*verify) {
    out = hiernet::guarded([&] {
      auto result = hiernet::cmd_verify(read_file(graph_path), read_file(packing_path));
      return with_run_manifest(std::move(result), "verify", hiernet::Json::object(), std::nullopt, start);
    });
  }
  return emit(out, out_path);
}
