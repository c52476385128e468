#include <cliquepoly/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace cliquepoly;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("cliquepoly_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    std::filesystem::path dir_;
};

} // namespace

TEST_F(CliTest, GenWritesEdgeList) {
    const Result r = run_cli({"gen", "cycle", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_F(CliTest, GenErIsSeeded) {
    const Result a = run_cli({"gen", "er", "12", "0.4", "--seed", "5"});
    const Result b = run_cli({"gen", "er", "12", "0.4", "--seed", "5"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, FVectorTorus) {
    ASSERT_EQ(run_cli({"gen", "torus16", "-o", path("t.el")}).code, 0);
    for (const std::string algo : {"brute", "gb", "ph"}) {
        const Result r = run_cli({"fvector", path("t.el"), "--algo", algo, "--seed", "3"});
        EXPECT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(r.out, "f-vector = (16, 48, 32)\nf = 1 + 16 t + 48 t^2 + 32 t^3\n");
    }
}

TEST_F(CliTest, FVectorJsonRoundTrip) {
    ASSERT_EQ(run_cli({"gen", "wheel", "4", "-o", path("w.json")}).code, 0);
    const Result r = run_cli({"fvector", path("w.json"), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("algo"), "ph");
    EXPECT_EQ(f_vector_from_json(j.at("f_vector")), (FVector{{5, 8, 4}}));
    EXPECT_EQ(uni_poly_from_json(j.at("f")), UniPoly({1, 5, 8, 4}));
}

TEST_F(CliTest, EulerAndCurvature) {
    const std::string k3 = write("k3.el", "3 3\n0 1\n0 2\n1 2\n");
    EXPECT_EQ(run_cli({"euler", k3}).out, "1\n");
    const Result c = run_cli({"curvature", k3});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "vertex\tK\n0\t1/3\n1\t1/3\n2\t1/3\nsum\t1\n");
    const Result cp = run_cli({"curvature", k3, "--poly"});
    EXPECT_NE(cp.out.find("0\t1/3\t"), std::string::npos);
}

TEST_F(CliTest, IndicesSumToEuler) {
    ASSERT_EQ(run_cli({"gen", "torus16", "-o", path("t.el")}).code, 0);
    const Result r = run_cli({"indices", path("t.el"), "--seed", "7", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("sum"), 0);
    EXPECT_EQ(j.at("vertices").size(), 16u);
    EXPECT_EQ(uni_poly_from_json(j.at("f")), UniPoly({1, 16, 48, 32}));
    EXPECT_EQ(run_cli({"indices", path("t.el")}).code, cli::exit_usage);
}

TEST_F(CliTest, WuK2) {
    const std::string k2 = write("k2.el", "2 1\n0 1\n");
    const Result r = run_cli({"wu", k2});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "# f-matrix: rows = dimension in G, columns = dimension in H\n2\t2\n2\t1\n"
                     "f(t,s) = 2 + 2 s + 2 t + t s\nomega = -1\n");
    EXPECT_EQ(run_cli({"wu", k2, "--algo", "brute"}).out, r.out);
}

TEST_F(CliTest, WuDeterministicAcrossThreads) {
    ASSERT_EQ(run_cli({"gen", "er", "14", "0.5", "--seed", "2", "-o", path("g.el")}).code, 0);
    const Result one = run_cli({"wu", path("g.el"), "--seed", "9", "--cutoff", "3", "--json"});
    const Result four = run_cli({"wu", path("g.el"), "--seed", "9", "--cutoff", "3", "--json", "--threads", "4"});
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out, four.out);
    const Result brute = run_cli({"wu", path("g.el"), "--algo", "brute", "--json"});
    EXPECT_EQ(nlohmann::json::parse(brute.out).at("f_matrix"), nlohmann::json::parse(one.out).at("f_matrix"));
}

TEST_F(CliTest, VerifyPasses) {
    ASSERT_EQ(run_cli({"gen", "wheel", "6", "-o", path("w.el")}).code, 0);
    const Result r = run_cli({"verify", path("w.el"), "--seed", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("poincare-hopf: ok"), std::string::npos);
}

TEST_F(CliTest, BenchShape) {
    const Result r = run_cli({"bench", "--n-list", "5,8", "--samples", "2", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n\tsamples\tmean_seconds");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("5\t2\t", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line.rfind("8\t2\t", 0), 0u);
    EXPECT_FALSE(std::getline(in, line));
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run_cli({}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"gen", "cycle", "2"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"gen", "er", "5", "2.0"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"gen", "hypercube", "3"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"fvector", path("missing.el")}).code, cli::exit_io);
    EXPECT_EQ(run_cli({"fvector", write("bad.el", "3 2\n0 1\n")}).code, cli::exit_io);
    EXPECT_EQ(run_cli({"fvector", write("ok.el", "2 1\n0 1\n"), "--algo", "magic"}).code, cli::exit_usage);
    EXPECT_EQ(run_cli({"--help"}).code, cli::exit_ok);
}
