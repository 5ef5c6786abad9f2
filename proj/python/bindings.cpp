// Python entry points. Each call goes through the command layer, so results
// are the same canonical documents the CLI prints and errors carry the same
// exit codes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hiernet/commands.hpp"

namespace py = pybind11;

namespace {

using hiernet::CommandOutput;

// (exit_code, rendered output, message)
py::tuple to_python(const CommandOutput& out) {
  const std::string body = out.document.is_null() && !out.text ? std::string() : out.rendered();
  return py::make_tuple(out.exit_code, body, out.message);
}

py::tuple run(const std::function<CommandOutput()>& body) {
  CommandOutput out;
  {
    py::gil_scoped_release release;
    out = hiernet::guarded(body);
  }
  return to_python(out);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hierarchical network topologies and internally edge-disjoint S-trees";
  m.attr("__version__") = std::string(hiernet::kToolVersion);
  m.attr("EXIT_OK") = static_cast<int>(hiernet::kExitOk);
  m.attr("EXIT_SEMANTIC") = static_cast<int>(hiernet::kExitSemantic);
  m.attr("EXIT_INPUT") = static_cast<int>(hiernet::kExitInput);
  m.attr("EXIT_PRECONDITION") = static_cast<int>(hiernet::kExitPrecondition);

  m.def(
      "gen",
      [](const std::string& family, std::size_t n, const std::string& format, const std::string& spec,
         std::size_t max_vertices) {
        return run([&] {
          hiernet::GenRequest req{family, n, spec};
          req.max_vertices = max_vertices;
          if (format == "dot") {
            req.format = hiernet::OutputFormat::kDot;
          } else if (format == "edges") {
            req.format = hiernet::OutputFormat::kEdges;
          } else if (format != "json") {
            throw hiernet::ArgumentError("unknown format \"" + format + "\"");
          }
          return hiernet::cmd_gen(req);
        });
      },
      py::arg("family"), py::arg("n") = 0, py::arg("format") = "json", py::arg("spec") = "",
      py::arg("max_vertices") = hiernet::default_vertex_budget());

  m.def(
      "strees",
      [](const std::string& graph, const std::vector<std::string>& targets, std::uint64_t budget) {
        return run([&] { return hiernet::cmd_strees(graph, targets, budget); });
      },
      py::arg("graph"), py::arg("targets"), py::arg("budget") = hiernet::kDefaultSearchBudget);

  m.def(
      "oracle",
      [](const std::string& graph, const std::string& mode, const std::vector<std::string>& args,
         std::uint64_t budget, std::size_t jobs, std::optional<std::size_t> expect) {
        return run([&] { return hiernet::cmd_oracle(graph, {mode, args, budget, jobs, expect}); });
      },
      py::arg("graph"), py::arg("mode"), py::arg("args") = std::vector<std::string>{},
      py::arg("budget") = hiernet::kDefaultSearchBudget, py::arg("jobs") = 1, py::arg("expect") = py::none());

  m.def(
      "verify",
      [](const std::string& graph, const std::string& packing) {
        return run([&] { return hiernet::cmd_verify(graph, packing); });
      },
      py::arg("graph"), py::arg("packing"));

  m.def("sha256_hex", [](const std::string& data) { return hiernet::sha256_hex(data); }, py::arg("data"));
}
