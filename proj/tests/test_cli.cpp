#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "schroeter/cli.hpp"
#include "schroeter/serialize.hpp"
#include "support.hpp"

using namespace testkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "schroeter");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  fs::path dir;

  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("schroeter_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    write("frame.json", seed_to_json(frame_seed(P(2, 3), P(5, 1))).dump());
    write("torsion.json", seed_to_json(torsion_seed(), torsion_curve()).dump());
  }
  void TearDown() override {
    fs::remove_all(dir);
    unsetenv("SCHROETER_SEED_DIR");
  }

  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

}  // namespace

TEST_F(CliTest, ConstructTorsionCloses) {
  Result r = cli({"construct", "--seed", path("torsion.json"), "--out", path("out.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(read("out.json"));
  EXPECT_TRUE(j["closed"].get<bool>());
  EXPECT_EQ(j["point_count"], 6);
  EXPECT_EQ(j["curve_source"], "supplied");
  EXPECT_EQ(j["seed"]["weierstrass"]["b"], "4");
}

TEST_F(CliTest, ConstructCappedFrame) {
  Result r = cli({"construct", "--seed", path("frame.json"), "--max-points", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["point_count"], 100);
  EXPECT_FALSE(j["closed"].get<bool>());
  EXPECT_EQ(j["pairs"].size(), 50u);
}

TEST_F(CliTest, ConstructRoundTripIsExact) {
  ASSERT_EQ(cli({"construct", "--seed", path("frame.json"), "--max-points", "40", "--out", path("a.json")}).code, 0);
  ConstructionState st = state_from_json(Json::parse(read("a.json")));
  Json again = state_to_json(st);
  Json orig = Json::parse(read("a.json"));
  EXPECT_EQ(again["pairs"], orig["pairs"]);
  EXPECT_EQ(again["curve"], orig["curve"]);
}

TEST_F(CliTest, ConstructCsvAndSvg) {
  Result r = cli({"construct", "--seed", path("torsion.json"), "--format", "csv", "--svg", path("t.svg")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 17), "pair,member,x,y,z");
  EXPECT_NE(read("t.svg").find("<svg"), std::string::npos);
}

TEST_F(CliTest, ShuffledRunsAreByteIdentical) {
  ASSERT_EQ(cli({"construct", "--seed", path("frame.json"), "--out", path("a.json"), "--max-points", "80"}).code, 0);
  ASSERT_EQ(cli({"construct", "--seed", path("frame.json"), "--out", path("b.json"), "--max-points", "80",
                 "--shuffle-seed", "12345"})
                .code,
            0);
  EXPECT_EQ(read("a.json"), read("b.json"));
}

TEST_F(CliTest, MalformedJsonExitsOne) {
  write("bad.json", "{ \"pairs\": [ ");
  Result r = cli({"construct", "--seed", path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST_F(CliTest, MissingSeedFileExitsOne) {
  EXPECT_EQ(cli({"construct", "--seed", path("nope.json")}).code, 1);
}

TEST_F(CliTest, InvalidSeedExitsOne) {
  write("quad.json", R"({"pairs": [[["0","0"],["2","-1"]], [["1","0"],["0","1","0"]], [["2","0"],["0","1"]]]})");
  Result r = cli({"construct", "--seed", path("quad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("CompleteQuadrilateral"), std::string::npos);
}

TEST_F(CliTest, SeedDirectoryLookup) {
  setenv("SCHROETER_SEED_DIR", dir.string().c_str(), 1);
  EXPECT_EQ(cli({"construct", "--seed", "torsion"}).code, 0);
  EXPECT_EQ(cli({"construct", "--seed", "torsion.json"}).code, 0);
  EXPECT_EQ(cli({"construct"}).code, 1);  // no default.json yet
  write("default.json", read("torsion.json"));
  EXPECT_EQ(cli({"construct"}).code, 0);
}

TEST_F(CliTest, InlineSeeds) {
  Result r = cli({"construct", "--a", "5", "--b", "4", "--points", "2,6;-2,2;-1,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["closed"].get<bool>());
  Result f = cli({"construct", "--points", "0,0;0,1;1,0;1,1;2,3;5,1", "--max-points", "20"});
  EXPECT_EQ(f.code, 0) << f.err;
}

TEST_F(CliTest, SeedFromCurve) {
  Result r = cli({"seed-from-curve", "--a", "1", "--b", "2", "--points", "1,2;2,4;1/16,23/64", "--out", path("s.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  SeedFile sf = seed_from_json(Json::parse(read("s.json")));
  std::set<PointPair> got(sf.seed.pairs.begin(), sf.seed.pairs.end());
  const SeedConfig demo = demo_curve_seed();
  std::set<PointPair> want(demo.pairs.begin(), demo.pairs.end());
  EXPECT_EQ(got, want);

  Result t = cli({"seed-from-curve", "--a", "5", "--b", "4", "--points", "2,6;-2,2;-1,0"});
  ASSERT_EQ(t.code, 0) << t.err;
  SeedFile ts = seed_from_json(Json::parse(t.out));
  EXPECT_EQ(ts.seed.pairs, torsion_seed().pairs);

  EXPECT_EQ(cli({"seed-from-curve", "--a", "1", "--b", "2", "--points", "1,3;2,4;1/16,23/64"}).code, 1);
  EXPECT_EQ(cli({"seed-from-curve", "--a", "1", "--b", "0", "--points", "1,2;2,4;1/16,23/64"}).code, 1);
}

TEST_F(CliTest, Fit) {
  write("cubic.json", R"([["0","0"],["1","1"],["2","8"],["3","27"],["4","64"],["5","125"],["6","216"],["7","343"],["8","512"]])");
  Result r = cli({"fit", path("cubic.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1 0 0 0 0 0 0 0 -1 0\n");

  write("conic.json", R"([["16","-4"],["9","-3"],["4","-2"],["1","-1"],["0","0"],["1","1"],["4","2"],["9","3"],["16","4"]])");
  EXPECT_EQ(cli({"fit", path("conic.json")}).code, 2);

  write("eight.json", R"([["-4","-64"],["-3","-27"],["-2","-8"],["-1","-1"],["0","0"],["1","1"],["2","8"],["3","27"]])");
  EXPECT_EQ(cli({"fit", path("eight.json")}).code, 1);

  Result j = cli({"fit", "--points", "0,0;1,1;2,8;3,27;4,64;5,125;6,216;7,343;8,512", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out), Json::parse(R"(["1","0","0","0","0","0","0","0","-1","0"])"));
}

TEST_F(CliTest, VerifyTorsionAllSuites) {
  Result r = cli({"verify", "--seed", path("torsion.json"), "--suite", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["ok"].get<bool>());
}

TEST_F(CliTest, VerifyGenericTangents) {
  Result r = cli({"verify", "--seed", path("frame.json"), "--suite", "tangents", "--max-points", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_GE(Json::parse(r.out)["summary"]["tangents"]["pass"].get<int>(), 50);
}

TEST_F(CliTest, VerifyCorruptedRunFails) {
  ASSERT_EQ(cli({"construct", "--seed", path("frame.json"), "--max-points", "20", "--out", path("run.json")}).code, 0);
  Json j = Json::parse(read("run.json"));
  j["pairs"][2]["points"][1] = Json::array({"3", "11", "1"});
  write("bad_run.json", j.dump());
  Result r = cli({"verify", "--run", path("bad_run.json"), "--suite", "invariants"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("InvariantViolation"), std::string::npos);
}

TEST_F(CliTest, VerifyUnknownSuiteIsUsageError) {
  EXPECT_EQ(cli({"verify", "--seed", path("torsion.json"), "--suite", "bogus"}).code, 1);
}

TEST_F(CliTest, Plot) {
  ASSERT_EQ(cli({"construct", "--seed", path("torsion.json"), "--out", path("run.json")}).code, 0);
  Result r = cli({"plot", "--run", path("run.json"), "--svg", path("p.svg"), "--tangents"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string svg = read("p.svg");
  EXPECT_NE(svg.find("<circle"), std::string::npos);

  write("empty.json", R"({"curve": ["1","0","1","0","0","4","0","-1","5","0"], "pairs": []})");
  Result e = cli({"plot", "--run", path("empty.json")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("</svg>"), std::string::npos);
  EXPECT_EQ(e.out.find("<circle"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"construct", "--format", "xml", "--seed", path("frame.json")}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(ErrorKind::ParseError), 1);
  EXPECT_EQ(exit_code_for(ErrorKind::FourCollinear), 1);
  EXPECT_EQ(exit_code_for(ErrorKind::AmbiguousFit), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::DegenerateNine), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::InvariantViolation), 3);
}
