#include <gtest/gtest.h>

#include "json.hpp"
#include "rwg/commands.hpp"
#include "rwg/error.hpp"

using rwg::Range;
using rwg::RunConfig;

namespace {

RunConfig with_range(int lo, int hi, rwg::Format f = rwg::Format::kText) {
  RunConfig cfg;
  cfg.range = Range{lo, hi};
  cfg.format = f;
  return cfg;
}

const rwg::Check* find_check(const rwg::Report& r, const std::string& name) {
  for (const auto& s : r.sections)
    for (const auto& c : s.checks)
      if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Range, Parsing) {
  EXPECT_EQ(rwg::parse_range("3..6"), (Range{3, 6}));
  EXPECT_EQ(rwg::parse_range("4"), (Range{4, 4}));
  EXPECT_THROW(rwg::parse_range("6..3"), rwg::DomainError);
  EXPECT_THROW(rwg::parse_range("3-6"), rwg::MalformedError);
  EXPECT_THROW(rwg::parse_range(""), rwg::MalformedError);
  EXPECT_EQ(rwg::to_string(Range{2, 5}), "2..5");
}

TEST(Config, MergeJson) {
  const RunConfig cfg = rwg::merge_config_json(
      R"({"format":"json","range":"2..4","strict":true,"caps":{"cycle_rank":7}})", RunConfig{});
  EXPECT_EQ(cfg.format, rwg::Format::kJson);
  EXPECT_EQ(cfg.range, (Range{2, 4}));
  EXPECT_TRUE(cfg.strict);
  EXPECT_EQ(cfg.limits.max_cycle_rank, 7u);
  EXPECT_THROW(rwg::merge_config_json(R"({"colour":"red"})", RunConfig{}), rwg::MalformedError);
  EXPECT_THROW(rwg::merge_config_json(R"({"strict":"yes"})", RunConfig{}), rwg::MalformedError);
  EXPECT_THROW(rwg::merge_config_json("not json", RunConfig{}), rwg::MalformedError);
}

TEST(RunCommand, ExitCodes) {
  EXPECT_EQ(rwg::run_command("words", with_range(4, 5)).exit_code, rwg::kExitOk);
  EXPECT_EQ(rwg::run_command("words", with_range(3, 3)).exit_code, rwg::kExitUsage);
  EXPECT_EQ(rwg::run_command("nonsense", RunConfig{}).exit_code, rwg::kExitUsage);
  EXPECT_EQ(rwg::run_command("verify-all", with_range(3, 5)).exit_code, rwg::kExitOk);
  RunConfig strict = with_range(3, 5);
  strict.strict = true;
  const auto r = rwg::run_command("verify-all", strict);
  EXPECT_EQ(r.exit_code, rwg::kExitFailure);
  EXPECT_FALSE(r.error.empty());
  RunConfig capped = with_range(5, 5);
  capped.limits.max_cycle_rank = 4;
  EXPECT_EQ(rwg::run_command("chroma", capped).exit_code, rwg::kExitResource);
}

TEST(RunCommand, JsonIsParseableAndDeterministic) {
  for (const char* cmd : {"words", "graph", "blambda", "chroma", "separation", "identities",
                          "conjectures", "verify-all"}) {
    const std::string name = cmd;
    RunConfig cfg = name == "words"        ? with_range(4, 6, rwg::Format::kJson)
                    : name == "identities" ? with_range(5, 6, rwg::Format::kJson)
                                           : with_range(3, 5, rwg::Format::kJson);
    const auto a = rwg::run_command(cmd, cfg);
    ASSERT_NE(a.exit_code, rwg::kExitUsage) << cmd << ": " << a.error;
    EXPECT_TRUE(nlohmann::json::accept(a.output)) << cmd;
    EXPECT_EQ(a.output, rwg::run_command(cmd, cfg).output) << cmd;
    cfg.format = rwg::Format::kMarkdown;
    EXPECT_NE(rwg::run_command(cmd, cfg).output.find("|"), std::string::npos) << cmd;
  }
}

TEST(Reports, GraphFlagsPrintedEdgeCount) {
  const auto rep = rwg::graph_report(Range{3, 6}, RunConfig{});
  EXPECT_EQ(rep.invariant_failures(), 0u);
  int edge_mismatches = 0;
  for (const auto& s : rep.sections)
    for (const auto& c : s.checks) {
      if (c.name == "edges") {
        EXPECT_EQ(c.verdict, rwg::Verdict::kMismatch);
        ++edge_mismatches;
      } else if (!c.invariant) {
        EXPECT_EQ(c.verdict, rwg::Verdict::kMatch) << c.name;
      }
    }
  EXPECT_EQ(edge_mismatches, 4);
}

TEST(Reports, ConjecturesSkipOutsideTheirRange) {
  RunConfig cfg;
  cfg.which = rwg::Which::kC1;
  const auto rep = rwg::conjectures_report(Range{3, 3}, cfg);
  EXPECT_EQ(rep.skipped(), 1u);
  EXPECT_EQ(rep.invariant_failures(), 0u);
}

TEST(Reports, IdentitiesRecordTheSubidentityCount) {
  const auto rep = rwg::identities_report(Range{5, 5}, RunConfig{});
  const auto* c = find_check(rep, "primitive proper subidentities");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->claimed, "2");
  EXPECT_EQ(c->computed, "6");
  EXPECT_EQ(c->verdict, rwg::Verdict::kMismatch);
}

TEST(Reports, ExportNeedsDot) {
  RunConfig cfg = with_range(3, 3, rwg::Format::kDot);
  for (const char* kind : {"word-graph", "blambda", "cartoon"}) {
    cfg.kind = kind;
    const auto r = rwg::run_command("export", cfg);
    EXPECT_EQ(r.exit_code, rwg::kExitOk) << kind;
    EXPECT_NE(r.output.find("graph"), std::string::npos);
  }
  cfg.kind = "tree";
  EXPECT_EQ(rwg::run_command("export", cfg).exit_code, rwg::kExitUsage);
  EXPECT_THROW(rwg::render(rwg::Report{}, rwg::Format::kDot), rwg::MalformedError);
}
