#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "vnc/cli.hpp"
#include "vnc/constructions.hpp"

using namespace vnc;
using namespace vnc::cli;

namespace {

const JobReport* find_job(const RunSummary& s, const std::string& name) {
  for (const JobReport& r : s.jobs) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Job certify_job(const Target& t) {
  Job j;
  j.name = t.id();
  j.targets = {t};
  j.checks = {Check::Certify};
  j.expect = known_expectations(t);
  return j;
}

}  // namespace

TEST(Cli, ParseChecksAndTargets) {
  EXPECT_EQ(parse_check("isomorphism-class"), Check::IsomorphismClass);
  EXPECT_EQ(parse_check("bogus"), std::nullopt);
  for (Check c : {Check::Certify, Check::SRegularity, Check::IsomorphismClass, Check::Quotient}) {
    EXPECT_EQ(parse_check(to_string(c)), c);
  }
  EXPECT_EQ(parse_target("NC3", {}, {}).id(), "NC3");
  EXPECT_EQ(parse_target("nc9", 13, {}).id(), "nc9(p=13)");
  EXPECT_EQ(parse_target("X", {}, 15).id(), "X(15,2)");
  EXPECT_THROW(parse_target("NC10", {}, {}), std::invalid_argument);
  EXPECT_THROW(parse_target("nc9", {}, {}), std::invalid_argument);
  EXPECT_THROW(parse_target("X", {}, {}), std::invalid_argument);
}

TEST(Cli, CertifyNc9Job) {
  const RunSummary s = run({certify_job(parse_target("nc9", 5, {}))});
  ASSERT_EQ(s.jobs.size(), 1u);
  EXPECT_TRUE(s.passed) << s.table();
  const nlohmann::json& t = s.jobs[0].body["targets"][0];
  EXPECT_EQ(t["order"], 60);
  EXPECT_EQ(t["certify"]["aut_order"], 120);
  EXPECT_EQ(t["certify"]["cayley_verdict"]["kind"], "NonCayley");
}

TEST(Cli, IsomorphismClassJob) {
  Job j;
  j.name = "order 60";
  for (int i = 0; i <= 6; ++i) j.targets.push_back(parse_target("NC" + std::to_string(i), {}, {}));
  j.targets.push_back(parse_target("nc9", 5, {}));
  j.checks = {Check::IsomorphismClass};
  j.expect.classes = 8;
  const RunSummary s = run({j});
  EXPECT_TRUE(s.passed) << s.table();
  EXPECT_EQ(s.jobs[0].body["classes"], 8);
}

TEST(Cli, MissingEdgeFileFailsTheRun) {
  const RunSummary s = run({certify_job(edge_file_target("/nonexistent/x.edges"))});
  EXPECT_FALSE(s.passed);
  EXPECT_FALSE(s.jobs[0].error.empty());
  EXPECT_NE(s.table().find("error:"), std::string::npos);
}

TEST(Cli, WrongExpectationFailsTheRun) {
  Job j = certify_job(parse_target("petersen", {}, {}));
  j.expect.cayley = true;
  EXPECT_FALSE(run({j}).passed);
}

TEST(Cli, ReportBodiesAreReproducible) {
  const std::vector<Job> jobs = theorem_suite({7});
  RunOptions serial;
  RunOptions parallel;
  parallel.threads = 4;
  const std::string a = run(jobs, serial).to_json(false).dump();
  const std::string b = run(jobs, parallel).to_json(false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(nlohmann::json::parse(a).count("timing_ms"), 0u);
  EXPECT_EQ(run(jobs, serial).to_json(true).count("timing_ms"), 1u);
}

TEST(Cli, SuiteFiveAndSeven) {
  const RunSummary s = run(theorem_suite({5, 7}));
  EXPECT_TRUE(s.passed) << s.table();
  for (int i = 0; i <= 8; ++i) {
    const JobReport* r = find_job(s, "certify NC" + std::to_string(i));
    ASSERT_NE(r, nullptr) << i;
    EXPECT_TRUE(r->passed()) << i;
  }
  ASSERT_NE(find_job(s, "certify nc9(p=5)"), nullptr);
  ASSERT_NE(find_job(s, "certify F084"), nullptr);
  ASSERT_NE(find_job(s, "isomorphism-class order 84"), nullptr);
}

TEST(Cli, SuiteSeventeen) {
  const RunSummary s = run(theorem_suite({17}));
  EXPECT_TRUE(s.passed) << s.table();
  ASSERT_NE(find_job(s, "certify F204"), nullptr);
  ASSERT_NE(find_job(s, "certify nc9(p=17)"), nullptr);
  EXPECT_TRUE(find_job(s, "certify nc9(p=17)")->passed());
}

TEST(Cli, SuiteThreeSkipsNc9) {
  const RunSummary s = run(theorem_suite({3}));
  const JobReport* r = find_job(s, "certify nc9(p=3)");
  ASSERT_NE(r, nullptr);
  EXPECT_NE(r->skip_reason.find("not 1 mod 4"), std::string::npos);
  EXPECT_TRUE(s.passed) << s.table();
  EXPECT_THROW(theorem_suite({9}), std::invalid_argument);
}

TEST(Cli, Export) {
  const auto dir = std::filesystem::temp_directory_path() / "vnc_export_test";
  std::filesystem::remove_all(dir);
  RunOptions opts;
  opts.export_dir = dir.string();
  ASSERT_TRUE(run({certify_job(parse_target("petersen", {}, {}))}, opts).passed);
  std::ifstream in(dir / "petersen.edges");
  ASSERT_TRUE(in.good());
  EXPECT_EQ(parse_edge_list(in), petersen_graph());
  opts.format = ExportFormat::Dot;
  run({certify_job(parse_target("petersen", {}, {}))}, opts);
  EXPECT_TRUE(std::filesystem::exists(dir / "petersen.dot"));
  std::filesystem::remove_all(dir);
}
