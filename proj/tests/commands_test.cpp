#include "hiernet/commands.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace hiernet {
namespace {

std::string doc_of(const HierGraph& h) { return emit_json(GraphDocument::hier(h)); }
std::string doc_of(const Graph& g) { return emit_json(GraphDocument::plain(g)); }

CommandOutput run(const std::function<CommandOutput()>& body) { return guarded(body); }

TEST(Gen, HcnTwoHasHierarchy) {
  const auto out = run([] { return cmd_gen({"hcn", 2}); });
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.document["order"], 16);
  EXPECT_TRUE(out.document.contains("hierarchy"));
  EXPECT_EQ(parse_graph_json(out.rendered()).hierarchy->cluster_count, 4u);
}

TEST(Gen, Formats) {
  GenRequest dot{"star", 3};
  dot.format = OutputFormat::kDot;
  const auto d = run([&] { return cmd_gen(dot); });
  ASSERT_TRUE(d.text.has_value());
  EXPECT_NE(d.text->find("graph hiernet"), std::string::npos);
  GenRequest edges{"cube", 3};
  edges.format = OutputFormat::kEdges;
  const auto e = run([&] { return cmd_gen(edges); });
  EXPECT_EQ(parse_edge_list(*e.text).edge_count(), 12u);
}

TEST(Gen, Errors) {
  EXPECT_EQ(run([] { return cmd_gen({"torus", 3}); }).exit_code, kExitInput);
  GenRequest big{"hcn", 6};
  big.max_vertices = 1000;
  const auto out = run([&] { return cmd_gen(big); });
  EXPECT_EQ(out.exit_code, kExitInput);
  EXPECT_NE(out.message.find("4096"), std::string::npos) << out.message;
}

TEST(Gen, ComposeSpec) {
  GenRequest ok{"compose", 0};
  ok.spec_text = R"({"base":{"order":2,"edges":[[0,1]]},"cross":[[[0,0],[1,1]],[[0,1],[1,0]]]})";
  const auto out = run([&] { return cmd_gen(ok); });
  EXPECT_EQ(out.exit_code, kExitOk) << out.message;
  EXPECT_EQ(out.document["order"], 4);

  // Vertex (0,0) gets two out-neighbours.
  GenRequest bad = ok;
  bad.spec_text = R"({"base":{"order":2,"edges":[[0,1]]},"cross":[[[0,0],[1,1]],[[0,0],[1,0]]]})";
  const auto rejected = run([&] { return cmd_gen(bad); });
  EXPECT_EQ(rejected.exit_code, kExitInput);
  EXPECT_FALSE(rejected.message.empty());

  GenRequest malformed = ok;
  malformed.spec_text = R"({"base":{"order":2}})";
  EXPECT_EQ(run([&] { return cmd_gen(malformed); }).exit_code, kExitInput);
}

TEST(ResolveVertex, IdsAndLabels) {
  const HierGraph h = hcn(3);
  EXPECT_EQ(resolve_vertex(h.graph, "17"), 17u);
  EXPECT_EQ(resolve_vertex(h.graph, h.graph.label(21)), 21u);
  EXPECT_EQ(resolve_vertex(h.graph, "<010,101>"), h.vertex(2, 5));
  EXPECT_THROW(resolve_vertex(h.graph, "64"), ArgumentError);
  EXPECT_THROW(resolve_vertex(h.graph, "<9,9>"), ArgumentError);
}

TEST(Strees, ValidPackingExitsZero) {
  const auto out = run([] { return cmd_strees(doc_of(hcn(3)), {"0", "1", "2"}); });
  EXPECT_EQ(out.exit_code, kExitOk) << out.message;
  EXPECT_EQ(out.document["trees"].size(), 3u);
  EXPECT_EQ(out.document["report"]["verdict"], "valid");
  EXPECT_EQ(out.document["case"]["kind"], "same-cluster");
}

TEST(Strees, ExitCodes) {
  EXPECT_EQ(run([] { return cmd_strees(doc_of(hs(2)), {"0", "1", "2"}); }).exit_code, kExitPrecondition);
  const auto pre = run([] { return cmd_strees(doc_of(hs(2)), {"0", "1", "2"}); });
  EXPECT_NE(pre.message.find("oracle"), std::string::npos);
  EXPECT_EQ(run([] { return cmd_strees(doc_of(hcn(3)), {"4", "4", "9"}); }).exit_code, kExitInput);
  const auto plain = run([] { return cmd_strees(doc_of(hypercube(3)), {"0", "1", "2"}); });
  EXPECT_EQ(plain.exit_code, kExitInput);
  EXPECT_NE(plain.message.find("not a hierarchical graph"), std::string::npos);
  EXPECT_EQ(run([] { return cmd_strees("{not json", {"0", "1", "2"}); }).exit_code, kExitInput);
}

TEST(Oracle, Kappa) {
  const auto out = run([] { return cmd_oracle(doc_of(hfq(2)), {"kappa"}); });
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.document["status"], "exact");
  EXPECT_EQ(out.document["value"], 4);
  EXPECT_EQ(out.document["cut"]["separator"].size(), 4u);
  EXPECT_EQ(out.document["paths"].size(), 4u);
}

TEST(Oracle, Kappa3Exhaustive) {
  OracleRequest req{"kappa3-exhaustive"};
  req.expect = 2;
  const auto out = run([&] { return cmd_oracle(doc_of(hcn(2)), req); });
  EXPECT_EQ(out.exit_code, kExitOk) << out.message;
  EXPECT_EQ(out.document["value"], 2);
  EXPECT_EQ(out.document["exhausted"], true);
  req.expect = 3;
  const auto mismatch = run([&] { return cmd_oracle(doc_of(hcn(2)), req); });
  EXPECT_EQ(mismatch.exit_code, kExitSemantic);
  EXPECT_NE(mismatch.message.find("expected 3"), std::string::npos);
}

TEST(Oracle, Kappa3Sample) {
  const auto out = run([] { return cmd_oracle(doc_of(hs(3)), {"kappa3-sample", {"30", "7"}}); });
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.document["exhausted"], false);
  EXPECT_EQ(out.document["seed"], 7);
  EXPECT_EQ(out.document["sample_count"], 30);
  EXPECT_LE(out.document["upper"].get<int>(), 2);
  EXPECT_EQ(run([] { return cmd_oracle(doc_of(hs(3)), {"kappa3-sample", {"30"}}); }).exit_code, kExitInput);
  EXPECT_EQ(run([] { return cmd_oracle(doc_of(hs(3)), {"kappa3-sample", {"x", "1"}}); }).exit_code, kExitInput);
}

TEST(Oracle, KappaSByLabel) {
  const HierGraph h = hfq(2);
  const OracleRequest req{"kappaS", {h.graph.label(0), "5", "10"}};
  const auto out = run([&] { return cmd_oracle(doc_of(h), req); });
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.document["value"], 3);
  EXPECT_EQ(out.document["packing"].size(), 3u);
  EXPECT_EQ(out.document["targets"], Json({0, 5, 10}));
}

TEST(Oracle, AbstentionIsNotAFailure) {
  OracleRequest req{"kappaS", {"8", "17", "32"}};
  req.budget = 500;
  const auto out = run([&] { return cmd_oracle(doc_of(hcn(3)), req); });
  EXPECT_EQ(out.exit_code, kExitOk);
  EXPECT_EQ(out.document["status"], "unknown");
  EXPECT_TRUE(out.document["value"].is_null());
  EXPECT_EQ(out.document["at_least"], out.document["lower"]);
  // An expectation inside the open interval is not contradicted.
  req.expect = 3;
  EXPECT_EQ(run([&] { return cmd_oracle(doc_of(hcn(3)), req); }).exit_code, kExitOk);
  req.expect = 9;
  EXPECT_EQ(run([&] { return cmd_oracle(doc_of(hcn(3)), req); }).exit_code, kExitSemantic);
}

TEST(Oracle, UnknownModeAndArguments) {
  EXPECT_EQ(run([] { return cmd_oracle(doc_of(hcn(2)), {"kappa4"}); }).exit_code, kExitInput);
  EXPECT_EQ(run([] { return cmd_oracle(doc_of(hcn(2)), {"kappa", {"1"}}); }).exit_code, kExitInput);
  EXPECT_EQ(run([] { return cmd_oracle(doc_of(hcn(2)), {"kappaS", {"1", "1", "2"}}); }).exit_code, kExitInput);
}

TEST(Verify, ValidAndInvalid) {
  const HierGraph h = hcn(3);
  const auto built = run([&] { return cmd_strees(doc_of(h), {"0", "20", "50"}); });
  const std::string packing = built.document.dump();
  EXPECT_EQ(run([&] { return cmd_verify(doc_of(h), packing); }).exit_code, kExitOk);

  // Duplicate an edge of tree 0 into tree 1.
  Json shared = built.document;
  shared["trees"][1].push_back(shared["trees"][0][0]);
  const auto bad = run([&] { return cmd_verify(doc_of(h), shared.dump()); });
  EXPECT_EQ(bad.exit_code, kExitSemantic);
  EXPECT_EQ(bad.document["verdict"], "invalid");
  bool has_shared_edge = false;
  for (const auto& v : bad.document["violations"]) has_shared_edge |= v["kind"] == "shared-edge";
  EXPECT_TRUE(has_shared_edge);

  Json outside = built.document;
  outside["trees"][0].push_back(Json::array({1, 64}));
  EXPECT_EQ(run([&] { return cmd_verify(doc_of(h), outside.dump()); }).exit_code, kExitInput);
  EXPECT_EQ(run([&] { return cmd_verify(doc_of(h), "[]"); }).exit_code, kExitInput);
}

TEST(Guarded, MapsExceptions) {
  EXPECT_EQ(run([]() -> CommandOutput { throw PreconditionError("p"); }).exit_code, kExitPrecondition);
  EXPECT_EQ(run([]() -> CommandOutput { throw SearchBudgetError("b", 5); }).exit_code, kExitSemantic);
  EXPECT_EQ(run([]() -> CommandOutput { throw ArgumentError("a"); }).exit_code, kExitInput);
  const auto out = run([]() -> CommandOutput { throw FormatError("bad input"); });
  EXPECT_EQ(out.exit_code, kExitInput);
  EXPECT_EQ(out.message, "error: bad input");
}

}  // namespace
}  // namespace hiernet
