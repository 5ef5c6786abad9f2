#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hiernet/io.hpp"

namespace hiernet {

// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitSemantic = 1,      // invalid packing, value mismatch under --expect
  kExitInput = 2,         // unreadable or malformed input, bad arguments
  kExitPrecondition = 3,  // composition outside the construction's range
};

// What a command hands back to the shell. `document` is written as canonical
// JSON unless `text` is set (DOT and edge-list output).
struct CommandOutput {
  int exit_code = kExitOk;
  Json document;
  std::optional<std::string> text;
  std::string message;  // human-readable note for stderr

  std::string rendered() const { return text ? *text : canonical_dump(document); }
};

enum class OutputFormat { kJson, kDot, kEdges };

struct GenRequest {
  std::string family;  // hs|hcn|hfq|star|cube|folded|compose
  std::size_t n = 0;
  std::string spec_text;  // compose only
  OutputFormat format = OutputFormat::kJson;
  std::size_t max_vertices = default_vertex_budget();
};

// Compose spec: {"base": {"order": t, "edges": [[u, v], ...]},
//                "cross": [[[c, l], [c, l]], ...], "labels": [...]?}
HierGraph parse_compose_spec(std::string_view text);

CommandOutput cmd_gen(const GenRequest& req);

// Dense ids or two-tuple labels; ASCII "<c,p>" is accepted.
VertexId resolve_vertex(const Graph& g, std::string_view token);

CommandOutput cmd_strees(std::string_view graph_text, const std::vector<std::string>& targets,
                         std::uint64_t search_budget = kDefaultSearchBudget);

struct OracleRequest {
  std::string mode;  // kappa|kappa3-exhaustive|kappa3-sample|kappaS
  std::vector<std::string> args;  // sample: k seed; kappaS: x y z
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t jobs = 1;
  std::optional<std::size_t> expect;
};

CommandOutput cmd_oracle(std::string_view graph_text, const OracleRequest& req);

CommandOutput cmd_verify(std::string_view graph_text, std::string_view packing_text);

// Runs `body`, mapping library exceptions onto exit codes and messages.
CommandOutput guarded(const std::function<CommandOutput()>& body);

}  // namespace hiernet
