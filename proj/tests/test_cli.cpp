#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("zeno_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path file(const std::string& name, const std::string& content) const {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

    Result run(const std::string& args) const {
        const auto out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
        const std::string cmd = std::string("\"") + ZENO_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                                err.string() + "\"";
        const int status = std::system(cmd.c_str());
        Result r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ThreeLevelZenoRunIsReproducible) {
    const auto cfg = file("zeno50.json", R"({"mode": "three_level_zeno", "n": 50, "dt": 0.1, "omega": 0.05, "eta": -0.2})");
    const auto a = dir_ / "a.csv", b = dir_ / "b.csv";
    const auto r1 = run("run --config \"" + cfg.string() + "\" --out \"" + a.string() + "\"");
    const auto r2 = run("run --config \"" + cfg.string() + "\" --out \"" + b.string() + "\"");
    ASSERT_EQ(r1.code, 0) << r1.err;
    ASSERT_EQ(r2.code, 0) << r2.err;
    const auto csv = slurp(a);
    EXPECT_EQ(csv, slurp(b));
    EXPECT_EQ(csv.rfind("t,p1,p2,p3,W\n", 0), 0u);
    EXPECT_NE(r1.out.find("W=0.99994861793415"), std::string::npos) << r1.out;
    EXPECT_FALSE(fs::exists(dir_ / "a.csv.tmp"));
}

TEST_F(Cli, MalformedConfigLeavesNoOutput) {
    const auto cfg = file("bad.json", R"({"mode": "three_level_zeno", "n": 50,)");
    const auto out = dir_ / "out.csv";
    const auto r = run("run --config \"" + cfg.string() + "\" --out \"" + out.string() + "\"");
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_FALSE(fs::exists(out));
    EXPECT_FALSE(fs::exists(dir_ / "out.csv.tmp"));
}

TEST_F(Cli, UnknownKeyIsConfigError) {
    const auto cfg = file("typo.json", R"({"mode": "ghz", "g": 0.02, "g_tilde": 0.005, "gg": 1})");
    const auto r = run("run --config \"" + cfg.string() + "\"");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("unknown config key 'gg'"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST_F(Cli, MissingConfigFileIsConfigError) {
    EXPECT_EQ(run("run --config \"" + (dir_ / "absent.json").string() + "\"").code, 1);
    EXPECT_EQ(run("run").code, 1);
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
}

TEST_F(Cli, GhzSummaryAndStateCsv) {
    const auto out = dir_ / "ghz.csv";
    const auto r = run("ghz --g 0.02 --g-tilde 0.005 --out \"" + out.string() + "\"");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("fidelity=0.99999"), std::string::npos) << r.out;
    const auto csv = slurp(out);
    EXPECT_EQ(csv.rfind("basis,re,im,p\n000,", 0), 0u) << csv;
    EXPECT_NE(csv.find("\n111,"), std::string::npos);
}

TEST_F(Cli, FlagsOverrideConfig) {
    const auto cfg = file("base.json", R"({"mode": "three_level_zeno", "n": 50, "dt": 0.1, "omega": 0.05})");
    const auto r = run("run --config \"" + cfg.string() + "\" --n 25 --dt 0.2");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n=25 W=0.99989736775605"), std::string::npos) << r.out;
}

TEST_F(Cli, ModeConflictIsConfigError) {
    const auto cfg = file("ghz.json", R"({"mode": "ghz", "g": 0.02, "g_tilde": 0.005})");
    const auto r = run("tunneling --config \"" + cfg.string() + "\"");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("conflicts"), std::string::npos) << r.err;
}

TEST_F(Cli, ExitCodeMapping) {
    EXPECT_EQ(run("ghz --g 0.02 --g-tilde 0.02").code, 1);
    EXPECT_EQ(run("three_level_zeno --omega 0.05 --n 50").code, 1);
    EXPECT_EQ(run("three_level_zeno --omega abc --n 50 --dt 0.1").code, 1);
    const auto io = run("ghz --g 0.02 --g-tilde 0.005 --out \"" + (dir_ / "no" / "such" / "dir.csv").string() + "\"");
    EXPECT_EQ(io.code, 3);
    EXPECT_NE(io.err.find("i/o error"), std::string::npos) << io.err;
}

TEST_F(Cli, NcritAndSweep) {
    auto r = run("ncrit --omega 0.05 --t-total 30");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n_crit=27"), std::string::npos) << r.out;

    const auto out = dir_ / "sweep.csv";
    r = run("sweep --omega 0.05 --t-total 5 --axis n --grid 25 50 100 --out \"" + out.string() + "\"");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto csv = slurp(out);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    EXPECT_EQ(csv.rfind("axis_value,w_zeno,w_no_zeno,w_tunnel\n25,", 0), 0u) << csv;
}

TEST_F(Cli, HelpExitsCleanly) {
    const auto r = run("--help");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("three_level_zeno"), std::string::npos);
}
