#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/cli.hpp"
#include "critpoly/poly.hpp"

namespace fs = std::filesystem;
using critpoly::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("critpoly_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& body) {
        const auto p = dir_ / name;
        std::ofstream(p) << body;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

double num(const nlohmann::json& j) { return j.get<double>(); }

}  // namespace

TEST_F(CliTest, GammaFromRoots) {
    const auto r = cli({"gamma", write("s.json", R"({"roots": [[0,0],[1,0],[-1,0]]})")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["command"], "gamma");
    EXPECT_NEAR(num(j["results"]["gamma"]), 0.5773502692, 1e-10);
    EXPECT_TRUE(j["results"]["in_unit_disk"].get<bool>());
    EXPECT_NEAR(num(j["results"]["bounds"]["refined_upper"]), std::sqrt(0.5), 1e-15);
    EXPECT_EQ(j["seed"], 0);
    EXPECT_TRUE(j.contains("tool_version"));
    EXPECT_FALSE(j.contains("timestamp"));
}

TEST_F(CliTest, GammaFromCoefficients) {
    const auto r = cli({"gamma", "--spec", write("s.json", R"({"coeffs": [[0,0],[-1,0],[0,0],[0,0],[1,0]]})")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(num(r.json()["results"]["gamma"]), 0.6299605249, 1e-10);
}

TEST_F(CliTest, GammaOfSymmetricPairIsZero) {
    const auto r = cli({"gamma", write("s.json", R"({"roots": [[1,0],[-1,0]]})")});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(num(r.json()["results"]["gamma"]), 0.0);
}

TEST_F(CliTest, OutsideDiskOmitsBounds) {
    const auto r = cli({"gamma", write("s.json", R"({"roots": [[3,0],[-1,0],[0,2]]})")});
    ASSERT_EQ(r.code, 0);
    EXPECT_FALSE(r.json()["results"]["in_unit_disk"].get<bool>());
    EXPECT_FALSE(r.json()["results"].contains("bounds"));
}

TEST_F(CliTest, RootsAndCoefficientsAgree) {
    const std::vector<critpoly::Complex> z{{0.3, 0.1}, {-0.5, 0.7}, {0.9, -0.2}, {-0.1, -0.8}, {0.2, 0.4}};
    const auto f = critpoly::from_roots(critpoly::RootSet(z));
    nlohmann::json roots = nlohmann::json::array(), coeffs = nlohmann::json::array();
    for (auto v : z) roots.push_back({v.real(), v.imag()});
    for (auto c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
    const auto a = cli({"gamma", write("a.json", nlohmann::json{{"roots", roots}}.dump())});
    const auto b = cli({"gamma", write("b.json", nlohmann::json{{"coeffs", coeffs}}.dump())});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_NEAR(num(a.json()["results"]["gamma"]), num(b.json()["results"]["gamma"]), 1e-8);
}

TEST_F(CliTest, MalformedSpecsExitTwo) {
    EXPECT_EQ(cli({"gamma", write("a.json", "{not json")}).code, 2);
    EXPECT_EQ(cli({"gamma", write("b.json", R"({"roots": [[1,0],[2,0]], "coeffs": [[1,0],[1,0]]})")}).code, 2);
    EXPECT_EQ(cli({"gamma", write("c.json", R"({"coeffs": [[1,0],[0,0],[2,0]]})")}).code, 2);  // not monic
    EXPECT_EQ(cli({"gamma", write("d.json", R"({"roots": [[1,0]]})")}).code, 2);
    EXPECT_EQ(cli({"gamma", write("e.json", R"({"roots": [[1,0,3],[2,0]]})")}).code, 2);
    EXPECT_EQ(cli({"gamma", write("f.json", R"({})")}).code, 2);
    EXPECT_EQ(cli({"gamma", path("missing.json")}).code, 2);
    std::string big = R"({"roots": [)";
    for (int k = 0; k < 65; ++k) big += std::string(k ? "," : "") + "[0." + std::to_string(k % 10) + ",0]";
    big += "]}";
    const auto r = cli({"gamma", write("g.json", big)});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("64"), std::string::npos);
}

TEST_F(CliTest, Variance) {
    auto r = cli({"variance", write("a.json", R"({"roots": [[0,0],[1,0],[-1,0]]})"), "--p", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(num(r.json()["results"]["value"]), 0.8164965809, 1e-10);
    EXPECT_EQ(r.json()["results"]["solver"], "closed_form");

    r = cli({"variance", write("b.json", R"({"roots": [[0,0],[1,0],[0,1]]})"), "--p", "inf"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(num(r.json()["results"]["value"]), 0.7071067812, 1e-10);
    EXPECT_EQ(r.json()["results"]["p"], "inf");

    r = cli({"variance", write("c.json", R"({"roots": [[0.5,0.5],[0.5,0.5],[0.5,0.5]]})"), "--p", "2"});
    EXPECT_EQ(num(r.json()["results"]["value"]), 0.0);

    EXPECT_EQ(cli({"variance", path("a.json"), "--p", "0.5"}).code, 2);
    EXPECT_EQ(cli({"variance", path("a.json"), "--p", "abc"}).code, 2);
}

TEST_F(CliTest, CheckVarianceBoundSuite) {
    const auto r = cli({"check", "--suite", "thm-mt", "--trials", "1000", "--degrees", "2..8", "--seed", "42"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_FALSE(j["results"]["summary"]["proven_violations"].get<bool>());
    EXPECT_EQ(j["results"]["buckets"].size(), 7u);
    for (const auto& b : j["results"]["buckets"]) EXPECT_EQ(b["passed"], 1000);
}

TEST_F(CliTest, CheckCollinearSchoenbergAllEquality) {
    const auto r = cli({"check", "--suite", "schoenberg", "--trials", "100", "--degrees", "3", "--seed", "7",
                        "--generator", "collinear"});
    ASSERT_EQ(r.code, 0);
    const auto b = r.json()["results"]["buckets"][0];
    EXPECT_EQ(b["equalities"], 100);
    EXPECT_EQ(b["evaluated"], 100);
}

TEST_F(CliTest, CheckSingleSpec) {
    const auto r = cli({"check", "--suite", "thm11", "--spec", write("s.json", R"({"roots": [[1,0],[1,0],[1,0]]})")});
    ASSERT_EQ(r.code, 0);
    const auto b = r.json()["results"]["buckets"][0];
    EXPECT_EQ(b["check"], "centroid_disk");
    EXPECT_EQ(num(b["first"]["lhs"]), 0.0);
    EXPECT_TRUE(b["first"]["passed"].get<bool>());
}

TEST_F(CliTest, CheckFlagErrors) {
    EXPECT_EQ(cli({"check", "--suite", "nope"}).code, 2);
    EXPECT_EQ(cli({"check", "--degrees", "1..3"}).code, 2);
    EXPECT_EQ(cli({"check", "--degrees", "3..x"}).code, 2);
    EXPECT_EQ(cli({"check", "--suite", "thm-mt1", "--radius", "3"}).code, 2);
    EXPECT_EQ(cli({"check", "--trials", "0", "--suite", "schoenberg"}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
}

TEST_F(CliTest, CheckOutputIndependentOfThreads) {
    const std::vector<std::string> base{"check", "--suite", "all", "--trials", "60", "--degrees", "2..6", "--seed", "5"};
    auto a = base, b = base;
    a.insert(a.end(), {"--threads", "1"});
    b.insert(b.end(), {"--threads", "4"});
    const auto ra = cli(a), rb = cli(b);
    ASSERT_EQ(ra.code, 0);
    EXPECT_EQ(ra.out, rb.out);
}

TEST_F(CliTest, SearchBracketsAndIsReproducible) {
    const auto a = cli({"search", "--n", "3", "--restarts", "8", "--seed", "1"});
    ASSERT_EQ(a.code, 0) << a.err;
    const double g = num(a.json()["results"]["runs"][0]["best_gamma"]);
    EXPECT_GE(g, 0.5773493);
    EXPECT_LE(g, 0.7071078);
    EXPECT_EQ(cli({"search", "--n", "3", "--restarts", "8", "--seed", "1"}).out, a.out);

    const auto b = cli({"search", "--n", "4", "--restarts", "8", "--seed", "1"});
    EXPECT_GE(num(b.json()["results"]["runs"][0]["best_gamma"]), 0.6299595);
    EXPECT_EQ(cli({"search", "--n", "2"}).code, 2);
}

TEST_F(CliTest, SearchAppendsCsv) {
    const std::string csv = path("sharp.csv");
    ASSERT_EQ(cli({"search", "--n", "3", "--restarts", "2", "--seed", "1", "--out", csv}).code, 0);
    ASSERT_EQ(cli({"search", "--n", "4", "--restarts", "2", "--seed", "1", "--out", csv}).code, 0);
    std::ifstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) lines.push_back(line);
    ASSERT_EQ(lines.size(), 3u);
    EXPECT_EQ(lines[0], "n,best_gamma,lower,refined_upper,c_hat,evaluations");
    EXPECT_EQ(lines[1].substr(0, 2), "3,");
    EXPECT_EQ(lines[2].substr(0, 2), "4,");
}

TEST_F(CliTest, TimestampsAreOptIn) {
    const auto r = cli({"search", "--n", "3", "--restarts", "1", "--timestamps"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.json().contains("timestamp"));
}

TEST_F(CliTest, BoundsTableCsv) {
    const auto r = cli({"bounds-table", "--n-list", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "n,lower,pawlowski_upper,refined_upper,lower_asymptote,pawlowski_asymptote\n"
              "3,0.577350269189626,0.866025403784439,0.707106781186548,0.633795903777297,0.932947279954857\n");
}

TEST_F(CliTest, BoundsTableJsonRatios) {
    const auto r = cli({"bounds-table", "--n-list", "1000,1000000", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto rows = r.json()["results"]["rows"];
    EXPECT_NEAR(num(rows[0]["lower_gap_ratio"]), 1.0, 0.01);
    EXPECT_NEAR(num(rows[1]["pawlowski_gap_ratio"]), 1.0, 0.001);
    EXPECT_TRUE(r.json()["results"]["refined_below_pawlowski"].get<bool>());
}

TEST_F(CliTest, BoundsTableToFile) {
    const std::string out = path("b.csv");
    ASSERT_EQ(cli({"bounds-table", "--n-range", "2..5", "--out", out}).code, 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
    EXPECT_EQ(cli({"bounds-table"}).code, 2);
    EXPECT_EQ(cli({"bounds-table", "--n-list", "1,2"}).code, 2);
}

TEST_F(CliTest, FloatsUseSeventeenSignificantDigits) {
    const auto r = cli({"gamma", write("s.json", R"({"roots": [[0,0],[1,0],[-1,0]]})")});
    EXPECT_NE(r.out.find("0.57735026918962573"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) {
    const auto r = cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("bounds-table"), std::string::npos);
}
