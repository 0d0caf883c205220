#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nilva/verifier.hpp"

using namespace nilva;
using namespace nilva::verifier;
using json = nlohmann::ordered_json;

namespace {

SuiteConfig base(std::vector<std::string> checks) {
  SuiteConfig c;
  c.checks = std::move(checks);
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Config, ParsesKeyValueText) {
  SuiteConfig c;
  apply_config_text(c,
                    "# run file\n"
                    "suite = \"modes,lie\"\n"
                    "k = 2\n"
                    "j = -1   # trailing comment\n"
                    "mode_grid = 3\n"
                    "variant = 'both'\n"
                    "params = 0,1;1,1\n");
  EXPECT_EQ(c.checks, (std::vector<std::string>{"lie", "modes"}));
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.j, -1);
  EXPECT_EQ(c.mode_grid, 3);
  EXPECT_EQ(c.variant, VariantChoice::Both);
  ASSERT_TRUE(c.params_list);
  EXPECT_EQ(c.params_list->size(), 2u);
}

TEST(Config, RejectsBadInput) {
  SuiteConfig c;
  EXPECT_THROW(apply_config_text(c, "colour = red\n"), ConfigError);
  EXPECT_THROW(apply_config_text(c, "k two\n"), ConfigError);
  EXPECT_THROW(apply_config_text(c, "k = two\n"), ConfigError);
  EXPECT_THROW(parse_variant("printed"), ConfigError);
  EXPECT_THROW(parse_suites("lie,bogus"), ConfigError);
  EXPECT_THROW(apply_config_file(c, "/nonexistent/run.conf"), ConfigError);
}

TEST(Config, ParamsListForms) {
  const auto a = parse_params_list("0,1;2,3");
  const auto b = parse_params_list("[[0,1],[2,3]]");
  ASSERT_EQ(a.size(), 2u);
  ASSERT_EQ(b.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a[i].k, b[i].k);
    EXPECT_EQ(a[i].j, b[i].j);
  }
  EXPECT_EQ(a[1].k, 2);
  EXPECT_EQ(a[1].j, 3);
}

TEST(Config, SuiteDefaultsAndOverrides) {
  SuiteConfig c;
  EXPECT_EQ(params_for(c, "lie").size(), 121u);
  EXPECT_EQ(params_for(c, "group").size(), 49u);
  EXPECT_EQ(params_for(c, "modes").size(), 6u);
  c.k = 3;
  const auto p = params_for(c, "lie");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].k, 3);
  EXPECT_EQ(p[0].j, 0);
  EXPECT_EQ(parse_suites("all"), suite_names());
}

TEST(Validate, Errors) {
  auto c = base({"fields"});
  c.window = 3;
  EXPECT_THROW(validate(c), ConfigError);
  c = base({"kernels"});
  c.log_degree = 2;
  EXPECT_THROW(validate(c), ConfigError);
  c = base({"lie"});
  c.jobs = 0;
  EXPECT_THROW(validate(c), ConfigError);
  c = base({});
  EXPECT_THROW(validate(c), ConfigError);
  EXPECT_NO_THROW(validate(base({"lie"})));
}

TEST(RunCommand, ConfigErrorExitCode) {
  auto c = base({"fields"});
  c.window = 2;
  std::ostringstream out, err;
  EXPECT_EQ(run_command(c, out, err), kExitConfig);
  EXPECT_FALSE(err.str().empty());
}

TEST(RunCommand, PassingRunWritesReport) {
  const auto path = (std::filesystem::temp_directory_path() / "nilva_test_report.json").string();
  std::filesystem::remove(path);
  auto c = base({"lie"});
  c.k = 1;
  c.j = 1;
  c.output = path;
  std::ostringstream out, err;
  EXPECT_EQ(run_command(c, out, err), kExitPass);
  EXPECT_NE(out.str().find("lie.jacobi"), std::string::npos);
  const json doc = json::parse(slurp(path));
  EXPECT_EQ(doc["version"], kReportVersion);
  EXPECT_EQ(doc["results"].size(), 4u);
  EXPECT_TRUE(doc["diff"].is_null());
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove(path);
}

TEST(Explain, KnownAndUnknown) {
  const auto f = explain("fields");
  ASSERT_TRUE(f);
  EXPECT_FALSE(f->empty());
  EXPECT_FALSE(explain("bogus"));
  for (const auto& t : explain_topics()) EXPECT_TRUE(explain(t)) << t;
}

TEST(Report, SchemaAndDeterminism) {
  auto c = base({"group", "modes"});
  c.k = 1;
  c.j = 1;
  c.mode_grid = 2;
  c.triple_grid = 2;
  c.variant = VariantChoice::Both;
  const auto r1 = run(c);
  c.jobs = 2;
  const auto r2 = run(c);
  const std::string a = render_report(c, r1);
  c.jobs = 1;
  EXPECT_EQ(a, render_report(c, r2));
  EXPECT_EQ(render_report(c, r1), render_report(c, run(c)));

  const json doc = json::parse(a);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "config", "results", "diff"}));
  bool saw_counterexample = false;
  for (const auto& res : doc["results"]) {
    for (const char* k : {"check", "params", "variant", "status", "holds", "counterexample", "comparisons", "notes"}) {
      EXPECT_TRUE(res.contains(k)) << k;
    }
    EXPECT_FALSE(res.contains("seconds"));
    if (!res["counterexample"].is_null()) {
      saw_counterexample = true;
      for (const char* k : {"expected", "actual"}) {
        const std::string v = res["counterexample"][k];
        EXPECT_NE(v.find('/'), std::string::npos) << v;
      }
    }
  }
  EXPECT_TRUE(saw_counterexample);
  ASSERT_TRUE(doc["diff"].is_object());
  EXPECT_TRUE(doc["diff"].contains("changed"));
  EXPECT_EQ(doc["diff"]["fixes"].size(), 3u);
}

TEST(Run, AsWrittenFailuresAreReportedNotFatal) {
  auto c = base({"modes"});
  c.k = 1;
  c.j = 1;
  c.mode_grid = 2;
  c.triple_grid = 2;
  c.variant = VariantChoice::AsWritten;
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, kExitPass);
  ASSERT_TRUE(r.diff);
  bool some_failure = false;
  for (const auto& x : r.results) {
    EXPECT_NE(x.status, Status::Fail);
    some_failure |= !x.holds;
  }
  EXPECT_TRUE(some_failure);
}

TEST(WriteAtomically, ReplacesContent) {
  const auto path = (std::filesystem::temp_directory_path() / "nilva_atomic.txt").string();
  write_atomically(path, "one\n");
  write_atomically(path, "two\n");
  EXPECT_EQ(slurp(path), "two\n");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove(path);
}
