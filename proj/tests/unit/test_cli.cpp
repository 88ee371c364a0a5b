#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chordal/generators.hpp"
#include "chordal/serialize.hpp"
#include "cli.hpp"

using namespace chordal;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("chordal_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    ::unsetenv("CHORDAL_CAPS");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    ::unsetenv("CHORDAL_CAPS");
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write_k(int n) const {
    std::string p = path("k" + std::to_string(n) + ".json");
    std::vector<VertexId> order;
    for (int i = 0; i < n; ++i) order.push_back(i);
    export_json(make_circular(complete_graph(n), order), p);
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenerateGridWritesThreeFiles) {
  CliResult r = run({"generate", "grid_row", "3", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "grid_row-3.drawing.json"));
  EXPECT_TRUE(fs::exists(dir_ / "grid_row-3.witnesses.json"));
  EXPECT_TRUE(fs::exists(dir_ / "grid_row-3.svg"));
  Json w = read_json_file(dir_ / "grid_row-3.witnesses.json");
  EXPECT_TRUE(w["witnesses"].contains("E_path_decomposition"));
}

TEST_F(CliTest, GenerateKttHasFourTPoints) {
  ASSERT_EQ(run({"generate", "ktt", "2", "--out", dir_.string(), "--no-svg"}).code, 0);
  EXPECT_FALSE(fs::exists(dir_ / "ktt-2.svg"));
  Drawing d = import_drawing(dir_ / "ktt-2.drawing.json");
  EXPECT_EQ(std::get<CircularDrawing>(d).graph().num_vertices(), 8);
}

TEST_F(CliTest, GenerateExpanderAndTrees) {
  ASSERT_EQ(run({"generate", "two_degenerate_expander", "4", "--out", dir_.string()}).code, 0);
  Json w = read_json_file(dir_ / "two_degenerate_expander-4.witnesses.json");
  EXPECT_EQ(w["witnesses"]["horizontal"]["sets"].size(), 6U);
  EXPECT_EQ(run({"generate", "product", "2", "--tree", "path:3", "--out", dir_.string()}).code, 0);
  EXPECT_EQ(run({"generate", "tree_plus_dominant", "--tree", "complete_binary_tree:2", "--out", dir_.string()}).code,
            0);
  EXPECT_EQ(run({"generate", "random", "--seed", "3", "--out", dir_.string()}).code, 0);
  EXPECT_TRUE(fs::exists(dir_ / "random-seed3.drawing.json"));
}

TEST_F(CliTest, GenerateErrors) {
  EXPECT_EQ(run({"generate", "nonsense", "3", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run({"generate", "grid_row", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run({"generate", "product", "2", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run({"generate", "product", "2", "--tree", "cycle:4", "--out", dir_.string()}).code, 2);
}

TEST_F(CliTest, AnalyzeK4Passes) {
  CliResult r = run({"analyze", write_k(4)});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["invariants"]["tw_g"], 3);
  EXPECT_EQ(j["drawing"]["crossings"], 1);
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST_F(CliTest, AnalyzeCrossingFreePath) {
  std::string p = path("path.json");
  export_json(make_circular(path_graph(5), {0, 1, 2, 3, 4}), p);
  CliResult r = run({"analyze", p, "--out", path("report.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = read_json_file(path("report.json"));
  EXPECT_EQ(j["drawing"]["crossings"], 0);
  EXPECT_EQ(j["invariants"]["tw_x"], 0);
  EXPECT_EQ(j, Json::parse(r.out));
}

TEST_F(CliTest, AnalyzeKttThreeReportsTreewidthThree) {
  ASSERT_EQ(run({"generate", "ktt", "3", "--out", dir_.string(), "--no-svg"}).code, 0);
  CliResult r = run({"analyze", (dir_ / "ktt-3.drawing.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["invariants"]["tw_x"], 3);
}

TEST_F(CliTest, AnalyzeInputErrors) {
  EXPECT_EQ(run({"analyze", path("missing.json")}).code, 2);
  std::ofstream(path("bad.json")) << "{not json";
  EXPECT_EQ(run({"analyze", path("bad.json")}).code, 2);
}

TEST_F(CliTest, CapsFromEnvironmentAndForce) {
  std::string k6 = write_k(6);
  ::setenv("CHORDAL_CAPS", "treewidth=5", 1);
  CliResult strict = run({"analyze", k6, "--no-minor-chain"});
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.err.find("too-large-instance"), std::string::npos);
  CliResult forced = run({"analyze", k6, "--no-minor-chain", "--force"});
  ASSERT_EQ(forced.code, 0) << forced.err;
  bool skipped = false;
  Json report = Json::parse(forced.out);
  for (const auto& c : report["checks"]) skipped = skipped || c.value("skipped", false);
  EXPECT_TRUE(skipped);
  // the flag overrides the environment
  EXPECT_EQ(run({"analyze", k6, "--no-minor-chain", "--caps", "treewidth=18"}).code, 0);
}

TEST_F(CliTest, VerifyNok2kCountsOrders) {
  CliResult r = run({"verify", "nok2k", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["counts"]["orders_k=1"], 12);
  EXPECT_FALSE(j.contains("wall_time_ms"));
}

TEST_F(CliTest, VerifyCycleLayersAndExitCodes) {
  EXPECT_EQ(run({"verify", "cycle-layers", "--t", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "no-such-suite"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "grid", "--jobs", "0"}).code, 2);
}

TEST_F(CliTest, VerifyReportsFailuresWithExitOne) {
  // G_1 is a single vertex, so the maximum degree check fails
  CliResult r = run({"verify", "expander", "--t", "1"});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["failures"].size(), 1U);
  EXPECT_EQ(j["failures"][0]["instance"], "t=1");
}

TEST_F(CliTest, VerifyIsByteStableAcrossRunsAndJobs) {
  std::vector<std::string> args{"verify", "width-bounds", "--seeds", "12", "--seed", "5"};
  CliResult a = run(args);
  CliResult b = run(args);
  args.insert(args.end(), {"--jobs", "3"});
  CliResult c = run(args);
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  CliResult timed = run({"verify", "grid", "--n", "2", "--timing"});
  EXPECT_TRUE(Json::parse(timed.out).contains("wall_time_ms"));
}

TEST_F(CliTest, ExportSvg) {
  CliResult r = run({"export-svg", write_k(5), path("k5.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("k5.svg"));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) {
  CliResult r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
