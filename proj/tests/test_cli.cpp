#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"

using namespace depends;

TEST(ParseArgs, ExampleInvocation) {
  auto parsed = parse_args({"kotlin", "./sqlex", "result", "-d", "./out"});
  ASSERT_TRUE(parsed.request);
  const CliRequest& req = *parsed.request;
  EXPECT_EQ(req.lang, "kotlin");
  EXPECT_EQ(req.src, "./sqlex");
  EXPECT_EQ(req.output, "result");
  EXPECT_EQ(req.output_dir, "./out");
  EXPECT_EQ(req.format, "json");
  EXPECT_EQ(req.granularity, "file");
  EXPECT_FALSE(req.show_language);
  EXPECT_FALSE(req.strip_leading_path);
  EXPECT_FALSE(req.auto_include);
}

TEST(ParseArgs, AllOptions) {
  auto parsed = parse_args({"java", "src", "out", "--auto-include", "-i", "lib", "-f", "dot", "-g", "file", "-s",
                            "--show-language", "-m", "-p", "unix"});
  ASSERT_TRUE(parsed.request);
  EXPECT_TRUE(parsed.request->auto_include);
  EXPECT_EQ(parsed.request->includes, std::vector<std::string>{"lib"});
  EXPECT_EQ(parsed.request->format, "dot");
  EXPECT_TRUE(parsed.request->strip_leading_path);
  EXPECT_TRUE(parsed.request->show_language);
  EXPECT_TRUE(parsed.request->emit_name_map);
  EXPECT_EQ(parsed.request->name_pattern, "unix");
}

TEST(ParseArgs, HelpExitsZero) {
  auto parsed = parse_args({"-h"});
  EXPECT_FALSE(parsed.request);
  EXPECT_EQ(parsed.exit_code, 0);
  EXPECT_NE(parsed.out.find("--dir"), std::string::npos);
}

TEST(ParseArgs, MissingPositionalsExitNonzero) {
  auto none = parse_args(std::vector<std::string>{});
  EXPECT_FALSE(none.request);
  EXPECT_NE(none.exit_code, 0);
  EXPECT_NE(none.err.find("Usage"), std::string::npos);
  EXPECT_NE(parse_args({"kotlin", "src"}).exit_code, 0);
}

TEST(ParseArgs, UnknownFlagExitsNonzero) {
  auto parsed = parse_args({"kotlin", "src", "out", "--bogus"});
  EXPECT_FALSE(parsed.request);
  EXPECT_NE(parsed.exit_code, 0);
}

TEST(RunCli, CorpusRunReportsEveryStage) {
  auto dir = std::filesystem::temp_directory_path() / "depends-cli-test";
  std::filesystem::remove_all(dir);
  std::ostringstream out, err;
  int code = run_cli({"kotlin", fixture::path("corpus"), "result", "--auto-include", "-d", dir.string()}, out, err);
  EXPECT_EQ(code, 0) << err.str();
  for (const char* stage :
       {"Source File Parsing:", "Entity Extraction:", "Dependency Relation Extraction:", "Result Output:", "Total:"})
    EXPECT_NE(out.str().find(stage), std::string::npos) << stage;
  EXPECT_TRUE(std::filesystem::exists(dir / "result.json"));
  std::filesystem::remove_all(dir);
}

TEST(RunCli, EmptyDirectoryFails) {
  auto dir = std::filesystem::temp_directory_path() / "depends-cli-empty";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ostringstream out, err;
  EXPECT_NE(run_cli({"kotlin", dir.string(), "result", "-d", dir.string()}, out, err), 0);
  EXPECT_NE(err.str().find("no source files found"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(RunCli, MissingDirectoryFails) {
  std::ostringstream out, err;
  EXPECT_NE(run_cli({"kotlin", "/nonexistent/depends", "result"}, out, err), 0);
}

TEST(RunCli, UnknownLanguageFails) {
  std::ostringstream out, err;
  EXPECT_NE(run_cli({"ruby", fixture::path("corpus"), "result"}, out, err), 0);
  EXPECT_NE(err.str().find("kotlin"), std::string::npos);
}

TEST(RunCli, MalformedFileIsSkippedNotFatal) {
  auto dir = std::filesystem::temp_directory_path() / "depends-cli-malformed";
  std::filesystem::remove_all(dir);
  CliRequest req;
  req.lang = "kotlin";
  req.src = fixture::path("malformed");
  req.output = "result";
  req.output_dir = dir.string();
  std::ostringstream out, err;
  RunResult result = run_pipeline(req, out, err);
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.files_parsed, 9u);
  EXPECT_NE(err.str().find("Broken.kt:6"), std::string::npos) << err.str();
  std::filesystem::remove_all(dir);
}

TEST(RunCli, TimingsAreConsistent) {
  auto dir = std::filesystem::temp_directory_path() / "depends-cli-timing";
  CliRequest req;
  req.lang = "kotlin";
  req.src = fixture::path("corpus");
  req.auto_include = true;
  req.output = "result";
  req.output_dir = dir.string();
  std::ostringstream out, err;
  RunResult r = run_pipeline(req, out, err);
  ASSERT_EQ(r.exit_code, 0);
  const StageTimings& t = r.timings;
  for (double v : {t.parsing_ms, t.entity_ms, t.relation_ms, t.output_ms, t.total_ms}) EXPECT_GE(v, 0.0);
  EXPECT_LE(t.parsing_ms + t.entity_ms + t.relation_ms + t.output_ms, t.total_ms + 1e-6);
  std::filesystem::remove_all(dir);
}
