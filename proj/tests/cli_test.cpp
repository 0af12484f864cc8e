#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args, const std::string& input = "") {
    std::string cmd = std::string(FDO_BINARY) + " " + args + " 2>/dev/null";
    if (!input.empty()) cmd = "printf '" + input + "' | " + cmd;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fdo_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
        write("c4.txt", "4 4 U UW\n0 1\n1 2\n2 3\n3 0\n");
        write("k4.txt", "4 6 U UW\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        write("d3.txt", "3 3 D UW\n0 1\n1 2\n2 0\n");
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

TEST_F(Cli, BuildAndQueryExact) {
    const Result b = run("build --graph " + path("c4.txt") + " --kind exact --out " + path("c4.fdo"));
    ASSERT_EQ(b.code, 0);
    const auto record = nlohmann::json::parse(b.out);
    EXPECT_EQ(record["record"], "build");
    EXPECT_EQ(record["kind"], "exact");
    EXPECT_EQ(record["stored_entries"], 4);

    const auto file = lines(slurp(path("c4.fdo")));
    ASSERT_EQ(file.size(), 5u);
    EXPECT_EQ(file[0].rfind("FDO exact 4 4 ", 0), 0u);
    for (std::size_t i = 1; i < file.size(); ++i) EXPECT_EQ(file[i], std::to_string(i - 1) + " 3");

    const Result q = run("query --graph " + path("c4.txt") + " --oracle " + path("c4.fdo"), "0-1\\n0-2\\n5-6\\n");
    EXPECT_EQ(q.code, 0);
    const auto out = lines(q.out);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0], "3");
    EXPECT_EQ(out[1], "2");
    EXPECT_EQ(out[2].rfind("error: ", 0), 0u);
}

TEST_F(Cli, MultiRejectsTooManyFailures) {
    ASSERT_EQ(run("build --graph " + path("k4.txt") + " --kind multi --f 2 --out " + path("k4.fdo")).code, 0);
    const Result q = run("query --graph " + path("k4.txt") + " --oracle " + path("k4.fdo"), "0-1 1-2 2-3\\n0-1\\n");
    const auto out = lines(q.out);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0], "error: too many failures");
    EXPECT_NE(out[1].find_first_of("0123456789"), std::string::npos);
}

TEST_F(Cli, Rejections) {
    EXPECT_NE(run("build --graph " + path("d3.txt") + " --kind multi --f 2 --out " + path("x")).code, 0);
    EXPECT_NE(run("build --graph " + path("c4.txt") + " --kind exact --k -1 --out " + path("x")).code, 0);
    EXPECT_NE(run("build --graph " + path("c4.txt") + " --kind nonsense --out " + path("x")).code, 0);
    EXPECT_NE(run("frobnicate").code, 0);

    ASSERT_EQ(run("build --graph " + path("c4.txt") + " --kind exact --out " + path("c4.fdo")).code, 0);
    EXPECT_NE(run("query --graph " + path("k4.txt") + " --oracle " + path("c4.fdo"), "0-1\\n").code, 0);
}

TEST_F(Cli, RandomizedBuildNeedsSeed) {
    write("c8.txt", "8 8 U UW\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n");
    const std::string base = "build --graph " + path("c8.txt") + " --kind approx --epsilon 0.5 --pivots random";
    EXPECT_NE(run(base + " --out " + path("a.fdo")).code, 0);
    EXPECT_EQ(run(base + " --seed 3 --out " + path("a.fdo")).code, 0);
    EXPECT_EQ(run(base + " --default-seed --out " + path("b.fdo")).code, 0);
}

TEST_F(Cli, BuildsAreByteIdentical) {
    ASSERT_EQ(run("gen er --n 20 --p 0.3 --seed 4 --out " + path("g.txt")).code, 0);
    for (const std::string kind : {"exact", "ecc", "multi --f 2", "approx --epsilon 0.5 --pivots deterministic"}) {
        const std::string cmd = "build --graph " + path("g.txt") + " --kind " + kind + " --out ";
        ASSERT_EQ(run(cmd + path("1.fdo")).code, 0) << kind;
        ASSERT_EQ(run(cmd + path("2.fdo")).code, 0) << kind;
        EXPECT_EQ(slurp(path("1.fdo")), slurp(path("2.fdo"))) << kind;
    }
}

TEST_F(Cli, Generators) {
    ASSERT_EQ(run("gen dense-lb --r 2 --payload-seed 1 --out " + path("d.txt") + " --manifest " + path("d.json")).code,
              0);
    EXPECT_EQ(lines(slurp(path("d.txt")))[0].rfind("8 ", 0), 0u);
    const auto manifest = nlohmann::json::parse(slurp(path("d.json")));
    EXPECT_EQ(manifest["generator"], "dense-lb");
    EXPECT_EQ(manifest["decode"].size(), 4u);

    const Result a = run("gen er --n 30 --p 0.2 --seed 5"), b = run("gen er --n 30 --p 0.2 --seed 5");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("30 ", 0), 0u);
    EXPECT_NE(run("gen er --n 30 --p 0.2").code, 0);
    EXPECT_NE(run("gen dense-lb --r 1").code, 0);
    EXPECT_NE(run("gen nope").code, 0);
}

TEST_F(Cli, Audit) {
    const Result exact = run("audit --graph " + path("c4.txt") + " --kind exact");
    EXPECT_EQ(exact.code, 0);
    const auto records = lines(exact.out);
    ASSERT_EQ(records.size(), 5u);
    const auto summary = nlohmann::json::parse(records.back());
    EXPECT_EQ(summary["record"], "summary");
    EXPECT_EQ(summary["violations"], 0);
    EXPECT_EQ(summary["exhaustive"], true);

    EXPECT_EQ(run("audit --graph " + path("c4.txt") + " --kind ecc").code, 0);
    EXPECT_EQ(run("audit --graph " + path("k4.txt") + " --kind multi --f 2").code, 0);

    ASSERT_EQ(run("build --graph " + path("c4.txt") + " --kind exact --out " + path("c4.fdo")).code, 0);
    std::string text = slurp(path("c4.fdo"));
    const auto pos = text.find("\n2 3\n");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 5, "\n2 2\n");
    write("bad.fdo", text);
    const Result bad = run("audit --graph " + path("c4.txt") + " --oracle " + path("bad.fdo"));
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(nlohmann::json::parse(lines(bad.out).back())["violations"], 1);
}

}  // namespace
