#include "uinv/cli.hpp"
#include "uinv/generators.hpp"
#include "uinv/io.hpp"
#include "uinv/random.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace uinv {
namespace {

namespace fs = std::filesystem;
using io::Json;

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("uinv_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, GenOrderOne) {
    const Result r = run({"gen", "--n", "1"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["poly"], "x[1][1]");
    EXPECT_EQ(j[0]["restricted"], "s[1][0]");
}

TEST_F(CliTest, GenOrderTwo) {
    const Result r = run({"gen", "--n", "2"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["poly"], "x[2][1]");
    EXPECT_EQ(j[1]["restricted"], "-s[1][0]*s[2][0]");
    EXPECT_EQ(j[2]["restricted"], "s[1][0]*s[2][1]");
    const Result text = run({"gen", "--n", "2", "--format", "text"});
    EXPECT_NE(text.out.find("J[1][0] (degree 1, 1 terms) = x[2][1]"), std::string::npos) << text.out;
}

TEST_F(CliTest, GenOrderThreeMatchesLibrary) {
    const Result r = run({"gen", "--n", "3"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 6u);
    for (const auto& e : j) {
        const Poly p = parse_poly(e["poly"].get<std::string>(), 3);
        EXPECT_EQ(p, build_J(e["k"].get<int>(), e["i"].get<int>(), 3));
        EXPECT_EQ(e["degree"].get<int>(), p.total_degree());
    }
    EXPECT_EQ(j[4]["restricted"], "-s[1][0]*s[2][0]^2*s[3][2] + s[1][0]*s[2][0]*s[2][1]*s[3][1]");
}

TEST_F(CliTest, GenGuard) {
    const Result r = run({"gen", "--n", "5"});
    EXPECT_EQ(r.code, cli::kGuard);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("--force"), std::string::npos);
    EXPECT_EQ(run({"gen", "--n", "0"}).code, cli::kGuard);
}

TEST_F(CliTest, VerifyOrderThreeSeedSeven) {
    const Result r = run({"verify", "--n", "3", "--seed", "7"});
    EXPECT_EQ(r.code, cli::kOk) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("checks passed"), std::string::npos);
}

TEST_F(CliTest, VerifyReportsRank) {
    const Result r = run({"verify", "--n", "2"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("rank 3 = 3 expected"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyTamperedGeneratorFails) {
    const Result r = run({"verify", "--n", "2", "--tamper"});
    EXPECT_EQ(r.code, cli::kCheckFailed);
    EXPECT_NE(r.out.find("FAIL invariance J[2][1]"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("witness"), std::string::npos);
    EXPECT_NE(r.out.find("PASS invariance J[1][0]"), std::string::npos);
}

TEST_F(CliTest, VerifyJson) {
    const Result r = run({"verify", "--n", "2", "--format", "json", "--trials", "3"});
    ASSERT_EQ(r.code, cli::kOk);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["trials"], 3);
    EXPECT_EQ(run({"verify", "--n", "2", "--trials", "0"}).code, cli::kGuard);
}

TEST_F(CliTest, CanonExamples) {
    Result r = run({"canon", write("a.json", R"({"n": 2, "entries": [["1", "2"], ["3", "4"]]})")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["canonical"]["coords"]["s[1][0]"], "3");
    EXPECT_EQ(j["canonical"]["coords"]["s[2][0]"], "2/3");
    EXPECT_EQ(j["canonical"]["coords"]["s[2][1]"], "5");
    EXPECT_EQ(j["fingerprint"]["values"]["J[2][1]"], "15");

    r = run({"canon", write("b.csv", "0,2\n3,7\n")});
    ASSERT_EQ(r.code, cli::kOk);
    j = Json::parse(r.out);
    EXPECT_EQ(j["matrix"]["entries"], Json::parse(R"([["0", "2"], ["3", "7"]])"));

    r = run({"canon", write("e.csv", "1,0\n0,1\n")});
    EXPECT_EQ(r.code, cli::kNotInOmega);
    EXPECT_NE(r.err.find("J_1 = 0"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, CanonNonGeneric) {
    const Result r = run({"canon", write("ng.csv", "0,0,5\n0,3,1\n2,0,7\n")});
    EXPECT_EQ(r.code, cli::kNonGeneric);
    EXPECT_NE(r.err.find("non-generic"), std::string::npos) << r.err;
}

TEST_F(CliTest, CanonBadInput) {
    EXPECT_EQ(run({"canon", write("bad.json", "{oops")}).code, cli::kBadInput);
    EXPECT_EQ(run({"canon", path("missing.json")}).code, cli::kBadInput);
}

TEST_F(CliTest, ClassifyTwoClasses) {
    Sampler rng(derive_seed(91, 0));
    const RatMatrix a = rng.omega_matrix(3);
    const RatMatrix b = rng.omega_matrix(3);
    Json all = Json::array({io::matrix_to_json(a), io::matrix_to_json(conjugate(rng.unipotent(3), a)),
                            io::matrix_to_json(b)});
    const Result r = run({"classify", write("m.json", all.dump())});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["classes"].size(), 2u);
    EXPECT_EQ(j["classes"][0]["members"], Json::parse("[0, 1]"));
    EXPECT_EQ(j["classes"][1]["members"], Json::parse("[2]"));
    EXPECT_TRUE(j["unclassified"].empty());
}

TEST_F(CliTest, ClassifyEmptyAndOutsideOmega) {
    Result r = run({"classify", write("empty.json", "[]")});
    ASSERT_EQ(r.code, cli::kOk);
    Json j = Json::parse(r.out);
    EXPECT_TRUE(j["classes"].empty());
    EXPECT_TRUE(j["unclassified"].empty());

    r = run({"classify", write("e.csv", "1,0\n0,1\n\n1,2\n3,4\n")});
    ASSERT_EQ(r.code, cli::kOk);
    j = Json::parse(r.out);
    ASSERT_EQ(j["unclassified"].size(), 1u);
    EXPECT_EQ(j["unclassified"][0]["index"], 0);
    EXPECT_EQ(j["unclassified"][0]["first_vanishing_minor"], 1);
    EXPECT_EQ(j["classes"].size(), 1u);
}

TEST_F(CliTest, ClassifyNonGenericMatricesExactly) {
    // Same fingerprint, different orbits; a conjugate of the first joins it.
    const std::string text = "0,0,5\n0,3,1\n2,0,7\n\n0,0,5\n0,3,4\n2,0,7\n";
    const Result r = run({"classify", write("ng.csv", text)});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["classes"].empty());
    EXPECT_EQ(j["nongeneric_classes"].size(), 2u);
}

TEST_F(CliTest, ClassifyMixedSizes) {
    const Result r = run({"classify", write("mixed.csv", "1,2\n3,4\n\n1\n")});
    EXPECT_EQ(r.code, cli::kMixedSizes);
    EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, OutputIsDeterministic) {
    EXPECT_EQ(run({"verify", "--n", "3", "--seed", "11"}).out, run({"verify", "--n", "3", "--seed", "11"}).out);
    EXPECT_EQ(run({"gen", "--n", "3"}).out, run({"gen", "--n", "3"}).out);
}

TEST_F(CliTest, OutFlagWritesOnlyOnSuccess) {
    const std::string out = path("gen.json");
    Result r = run({"gen", "--n", "2", "--out", out});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), run({"gen", "--n", "2"}).out);

    const std::string failed = path("canon.json");
    r = run({"canon", write("e.csv", "1,0\n0,1\n"), "--out", failed});
    EXPECT_EQ(r.code, cli::kNotInOmega);
    EXPECT_FALSE(fs::exists(failed));
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_NE(run({}).code, cli::kOk);
    EXPECT_NE(run({"gen"}).code, cli::kOk);
    EXPECT_NE(run({"gen", "--n", "2", "--format", "xml"}).code, cli::kOk);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, Bench) {
    const Result r = run({"bench", "--n", "3", "--format", "json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NO_THROW((void)Json::parse(r.out));
    EXPECT_EQ(run({"bench", "--n", "9"}).code, cli::kGuard);
}

}  // namespace
}  // namespace uinv
