#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "racg/error.hpp"
#include "racg_cli/commands.hpp"
#include "racg_cli/group_file.hpp"
#include "racg_cli/report.hpp"

namespace racg::cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "racg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string group(const std::string& name) { return std::string(RACG_GROUPS_DIR) + "/" + name + ".json"; }

TEST(GroupFile, ParsesAndRoundTrips) {
  const auto sys = parse_group(R"({"name": "z", "generators": ["s", "t", "u"], "commuting_pairs": [["t", "u"]]})");
  EXPECT_EQ(sys.rank(), 3U);
  EXPECT_TRUE(sys.commutes(gen(1), gen(2)));
  const auto again = parse_group(write_group(sys));
  EXPECT_EQ(again.tag(), sys.tag());
}

TEST(GroupFile, ReportsErrorsByLocation) {
  auto message = [](const std::string& text) {
    try {
      parse_group(text, "g.json");
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("{\"generators\": [\"s\",]}").find("g.json: line 1, column"), std::string::npos);
  EXPECT_NE(message(R"({"generators": ["s", "t"], "commuting_pairs": [["s", "x"]]})")
                .find("commuting_pairs[0]: unknown generator 'x'"),
            std::string::npos);
  EXPECT_NE(message(R"({"generators": ["s"], "extra": 1})").find("extra"), std::string::npos);
  EXPECT_NE(message(R"({"generators": ["s", "s"]})").find("generators"), std::string::npos);
  EXPECT_NE(message(R"({"generators": ["1x"]})").find("generators[0]"), std::string::npos);
  EXPECT_NE(message(R"({"commuting_pairs": []})").find("generators"), std::string::npos);
}

TEST(Report, TextRendering) {
  ordered_json j;
  j["name"] = "free3";
  j["rho"] = 0.5;
  j["list"] = {1, 2, 3};
  j["missing"] = nullptr;
  const std::string text = render_text(j);
  EXPECT_NE(text.find("name: free3"), std::string::npos);
  EXPECT_NE(text.find("list: [1, 2, 3]"), std::string::npos);
  EXPECT_NE(text.find("missing: none"), std::string::npos);
}

TEST(Cli, InfoAndGrowth) {
  auto r = invoke({"info", "--group", group("pentagon")});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("irreducible"), std::string::npos);

  r = invoke({"growth", "--group", group("free3"), "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "growth");
  EXPECT_EQ(j["series"], "(1 + t) / (1 - 2*t)");
}

TEST(Cli, Classify) {
  auto r = invoke({"classify", "--group", group("free3"), "--q", "1/3", "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classification"], "factor_plus_C");
  EXPECT_EQ(j["center_dimension"], 2);

  r = invoke({"classify", "--group", group("infinite_dihedral"), "--q", "2"});
  EXPECT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("not_applicable"), std::string::npos);

  EXPECT_EQ(invoke({"classify", "--group", group("free3"), "--q", "-1"}).code, kInputError);
  EXPECT_EQ(invoke({"classify", "--group", group("free3"), "--q", "abc"}).code, kInputError);
  EXPECT_EQ(invoke({"classify", "--group", group("free3")}).code, kInputError);
  EXPECT_EQ(invoke({"classify", "--group", "/nonexistent.json", "--q", "1"}).code, kInputError);
}

TEST(Cli, GammaAndZeta) {
  auto r = invoke({"gamma", "--group", group("z2sq_free_z2"), "--radius", "6", "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);

  r = invoke({"zeta-check", "--group", group("free3"), "--q", "1/8", "--radius", "6"});
  EXPECT_EQ(r.code, kPass) << r.err;
  r = invoke({"zeta-check", "--group", group("free3"), "--q", "2", "--radius", "6"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("precondition violated"), std::string::npos);
  r = invoke({"gamma", "--group", group("infinite_dihedral")});
  EXPECT_EQ(r.code, kInputError);
}

TEST(Cli, CapacityExceededIsAFailure) {
  const auto r = invoke({"ball", "--group", group("pentagon"), "--radius", "30", "--max-ball", "1000"});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_NE(r.err.find("capacity exceeded"), std::string::npos);
}

TEST(Cli, DykemaAndHecke) {
  auto r = invoke({"dykema", "--ranks", "2,1", "--q", "3", "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["atoms"].size(), 1U);
  EXPECT_EQ(invoke({"dykema", "--ranks", "1,1,1", "--q", "3"}).code, kInputError);
  EXPECT_EQ(invoke({"dykema", "--ranks", "2,x", "--q", "3"}).code, kInputError);

  r = invoke({"hecke", "--group", group("free3"), "--expr", "T(s)*T(s)"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_NE(r.out.find("T(1) + (u - u^-1)*T(s)"), std::string::npos);
  EXPECT_EQ(invoke({"hecke", "--group", group("free3"), "--expr", "T(s) + j(T(s))"}).code, kInputError);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = invoke({"verify", "--seed", "3"});
  const auto b = invoke({"verify", "--seed", "3"});
  EXPECT_EQ(a.code, kPass);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"--help"}).code, kPass);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"rho", "--group", group("free3"), "--format", "xml"}).code, kInputError);
}

}  // namespace
}  // namespace racg::cli
