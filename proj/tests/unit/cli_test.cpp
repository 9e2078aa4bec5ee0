#include "qlogic/cli.hpp"
#include "qlogic/serialization.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using qlogic::Json;

namespace {

const fs::path kGolden = fs::path(QLOGIC_SOURCE_DIR) / "tests" / "golden";

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = qlogic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string input(const std::string &name) { return (kGolden / "inputs" / name).string(); }

std::string slurp(const fs::path &path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Timing is the one field allowed to differ between runs.
Json stable(Json doc) {
    if (doc.contains("results") && doc["results"].is_object()) doc["results"].erase("wall_time_ms");
    return doc;
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int code;
};

class Golden : public testing::TestWithParam<GoldenCase> {};

}  // namespace

TEST_P(Golden, MatchesRecordedReport) {
    const auto &c = GetParam();
    auto r = run(c.args);
    EXPECT_EQ(r.code, c.code) << r.err;
    const fs::path file = kGolden / (c.name + ".json");
    if (std::getenv("QLOGIC_UPDATE_GOLDEN")) {
        std::ofstream(file) << r.out;
        GTEST_SKIP() << "rewrote " << file;
    }
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(stable(Json::parse(r.out)), stable(Json::parse(slurp(file))));
}

INSTANTIATE_TEST_SUITE_P(
    Commands, Golden,
    testing::Values(
        GoldenCase{"validate", {"validate", input("boolean_powerset_2.json"), "--format", "json"}, 0},
        GoldenCase{"validate_missing_supplement", {"validate", input("missing_supplement.json"), "--format", "json"}, 1},
        GoldenCase{"analyze", {"analyze", input("chain_3.json"), "--format", "json"}, 0},
        GoldenCase{"clone_search", {"clone-search", input("boolean_powerset_2.json"), "--format", "json"}, 0},
        GoldenCase{"clone_search_mo2", {"clone-search", input("mo_2.json"), "--format", "json"}, 1},
        GoldenCase{"states", {"states", input("mo_2.json"), "--format", "json"}, 0},
        GoldenCase{"hidden", {"hidden", input("boolean_powerset_2.json"), "--parts", "{1},{2}", "--format", "json"}, 0},
        GoldenCase{"catalog", {"catalog", "wright_triangle"}, 0}),
    [](const testing::TestParamInfo<GoldenCase> &info) { return info.param.name; });

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"validate", input("boolean_powerset_2.json")}).code, 0);
    auto bad = run({"validate", input("missing_supplement.json")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("SupplementMissing"), std::string::npos);
    EXPECT_EQ(run({"validate", input("truncated.json")}).code, 2);
    EXPECT_EQ(run({"validate", input("no_such_file.json")}).code, 2);
    EXPECT_EQ(run({"clone-search", input("mo_2.json")}).code, 1);
    EXPECT_EQ(run({"clone-search", input("boolean_powerset_2.json")}).code, 0);
    EXPECT_EQ(run({"clone-search", input("boolean_powerset_4.json"), "--budget", "10"}).code, 3);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"catalog", "chain", "99"}).code, 2);
    EXPECT_EQ(run({"analyze", input("missing_supplement.json")}).code, 1);
}

TEST(Cli, AnalyzeReport) {
    auto r = run({"analyze", input("chain_3.json"), "--format", "json"});
    auto doc = Json::parse(r.out)["results"];
    EXPECT_EQ(doc["atoms"], Json({"1/3"}));
    EXPECT_EQ(doc["iota"]["1/3"], 3);
    EXPECT_EQ(doc["is_boolean"], false);
    auto mo = Json::parse(run({"analyze", input("mo_2.json"), "--format", "json"}).out)["results"];
    bool found = false;
    for (const auto &pair : mo["incompatible_pairs"]) found = found || pair == Json({"a1", "a2"});
    EXPECT_TRUE(found);
    auto b2 = Json::parse(run({"analyze", input("boolean_powerset_2.json"), "--format", "json"}).out)["results"];
    EXPECT_EQ(b2["is_boolean"], true);
}

TEST(Cli, CloneSearchWitnessIsTheMeetTable) {
    auto doc = Json::parse(run({"clone-search", input("boolean_powerset_2.json"), "--format", "json"}).out);
    EXPECT_EQ(doc["results"]["first_is_meet_table"], true);
    EXPECT_EQ(doc["results"]["lemmas"]["passed"], true);
    EXPECT_FALSE(doc.contains("seed"));
}

TEST(Cli, StatesAndHidden) {
    auto states = Json::parse(run({"states", input("mo_2.json"), "--format", "json"}).out);
    EXPECT_EQ(states["results"]["vertex_count"], 4);
    auto hidden = run({"hidden", input("boolean_powerset_2.json"), "--parts", "{1},{2}", "--format", "json"});
    EXPECT_EQ(hidden.code, 0);
    auto doc = Json::parse(hidden.out);
    EXPECT_EQ(doc["seed"], 0x5eed);
    EXPECT_EQ(doc["results"]["verification"]["passed"], true);
    EXPECT_EQ(run({"hidden", input("boolean_powerset_2.json")}).code, 0);
    // not a decomposition into chains
    EXPECT_EQ(run({"hidden", input("boolean_powerset_2.json"), "--parts", "1"}).code, 1);
    EXPECT_EQ(run({"hidden", input("boolean_powerset_2.json"), "--parts", "{1},nope"}).code, 2);
    // decomposition exists but there is no cloning bimorphism
    auto mo = run({"hidden", input("mo_2.json"), "--format", "json"});
    EXPECT_EQ(mo.code, 1);
    EXPECT_EQ(Json::parse(mo.out)["results"]["hypotheses_met"], false);
    auto seeded = Json::parse(run({"hidden", input("boolean_powerset_2.json"), "--seed", "7", "--format", "json"}).out);
    EXPECT_EQ(seeded["seed"], 7);
}

TEST(Cli, CatalogWritesAFileThatValidates) {
    fs::path out = fs::temp_directory_path() / "qlogic_cli_test_wright.json";
    auto r = run({"catalog", "wright_triangle", "-o", out.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(run({"validate", out.string()}).code, 0);
    EXPECT_EQ(run({"catalog", "product(chain(2),chain(2))", "-o", out.string()}).code, 0);
    EXPECT_EQ(run({"catalog", "chain", "3", "-o", out.string()}).code, 0);
    EXPECT_EQ(slurp(out), slurp(kGolden / "inputs" / "chain_3.json"));
    fs::remove(out);
}

TEST(Cli, ReportsAreDeterministic) {
    auto a = run({"states", input("mo_2.json"), "--format", "json"});
    auto b = run({"states", input("mo_2.json"), "--format", "json"});
    EXPECT_EQ(a.out, b.out);
    auto c = Json::parse(a.out);
    EXPECT_EQ(c["input_digest"], qlogic::cli::sha256_hex(slurp(input("mo_2.json"))));
}

TEST(Cli, SplitLabels) {
    using qlogic::cli::split_labels;
    EXPECT_EQ(split_labels("{1},{2}"), (std::vector<std::string>{"{1}", "{2}"}));
    EXPECT_EQ(split_labels("{1,2},{3}"), (std::vector<std::string>{"{1,2}", "{3}"}));
    EXPECT_EQ(split_labels("(0,1/2),(1,0)"), (std::vector<std::string>{"(0,1/2)", "(1,0)"}));
    EXPECT_EQ(split_labels("a1,a1'"), (std::vector<std::string>{"a1", "a1'"}));
}

TEST(Cli, Sha256) {
    EXPECT_EQ(qlogic::cli::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}
