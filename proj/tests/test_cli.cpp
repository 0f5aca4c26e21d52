#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

const std::string kCli = CLUSCOL_CLI;
const std::string kFixtures = CLUSCOL_FIXTURES;

struct RunResult {
    int exitCode = -1;
    std::string out;
    std::string err;
};

// Runs the CLI with stdout and stderr captured separately.
RunResult runCli(const std::string& args) {
    static int counter = 0;
    fs::path errFile = fs::temp_directory_path() / ("cluscol_cli_err_" + std::to_string(counter++) + ".txt");
    std::string cmd = kCli + " " + args + " 2>" + errFile.string();
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(errFile);
    std::stringstream ss;
    ss << err.rdbuf();
    res.err = ss.str();
    fs::remove(errFile);
    return res;
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string tmpFile(const std::string& name) {
    return (fs::temp_directory_path() / ("cluscol_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("lift on the path fixture reports ok") {
    std::string out = tmpFile("p3_lift.json");
    RunResult res = runCli("lift --graph " + fixture("p3_graph.json") + " --tcd " + fixture("p3_tcd.json") +
                           " --kmap " + fixture("p3_kmap.json") + " --clustering 1 --xi 1 --out " + out);
    REQUIRE(res.exitCode == 0);
    nlohmann::json report = nlohmann::json::parse(res.out);
    CHECK(report["ok"] == true);
    CHECK(report["nStar"] == 17);
    CHECK(report["paletteUsed"] == 2);
    nlohmann::json coloring = nlohmann::json::parse(slurp(out));
    CHECK(coloring["colors"] == nlohmann::json::array({1, 2, 1}));
}

TEST_CASE("malformed input exits with the parse code and a diagnostic") {
    RunResult res = runCli("lift --graph " + fixture("malformed.json") + " --tcd " + fixture("p3_tcd.json") +
                           " --kmap " + fixture("p3_kmap.json") + " --clustering 1 --xi 1 --out " +
                           tmpFile("never.json"));
    CHECK(res.exitCode == 2);
    CHECK(res.err.find("json") != std::string::npos);
}

TEST_CASE("adhesion past the declared bound names the tree edge") {
    RunResult res = runCli("lift --graph " + fixture("k4_graph.json") + " --tcd " + fixture("k4_tcd.json") +
                           " --kmap " + fixture("k4_kmap.json") + " --clustering 1 --xi 3 --out " +
                           tmpFile("never2.json"));
    CHECK(res.exitCode == 2);
    CHECK(res.err.find("tree edge") != std::string::npos);
}

TEST_CASE("verify passes and fails with matching exit codes") {
    RunResult good = runCli("verify --graph " + fixture("c4_graph.json") + " --coloring " +
                            fixture("c4_good_coloring.json") + " -k 2 --clustering 1");
    CHECK(good.exitCode == 0);
    CHECK(nlohmann::json::parse(good.out)["ok"] == true);

    RunResult bad = runCli("verify --graph " + fixture("c4_graph.json") + " --coloring " +
                           fixture("c4_bad_coloring.json") + " -k 2 --clustering 1");
    CHECK(bad.exitCode == 1);
    nlohmann::json report = nlohmann::json::parse(bad.out);
    CHECK(report["ok"] == false);
    CHECK(report["witness"].size() == 3);
}

TEST_CASE("td-lift torso mode colors the path fixture") {
    std::string out = tmpFile("p4_td_torso.json");
    RunResult res = runCli("td-lift --graph " + fixture("p4_graph.json") + " --td " + fixture("p4_td.json") +
                           " --mode torso -k 2 --clustering 2 -d 2 --eta 1 --out " + out);
    REQUIRE(res.exitCode == 0);
    nlohmann::json report = nlohmann::json::parse(res.out);
    CHECK(report["ok"] == true);
    CHECK(report["paletteUsed"] == 2);
}

TEST_CASE("td-lift bag mode spends one extra color") {
    std::string out = tmpFile("p4_td_bag.json");
    RunResult res = runCli("td-lift --graph " + fixture("p4_graph.json") + " --td " + fixture("p4_td.json") +
                           " --mode bag -k 1 --clustering 2 -d 2 --eta 1 --out " + out);
    REQUIRE(res.exitCode == 0);
    CHECK(nlohmann::json::parse(res.out)["paletteUsed"] == 2);
}

TEST_CASE("td-lift torso mode rejects a one-color palette") {
    RunResult res = runCli("td-lift --graph " + fixture("p4_graph.json") + " --td " + fixture("p4_td.json") +
                           " --mode torso -k 1 --clustering 2 -d 2 --eta 1 --out " + tmpFile("never3.json"));
    CHECK(res.exitCode == 2);
}

TEST_CASE("td-lift dumps intermediate decompositions on request") {
    std::string dir = tmpFile("stages");
    RunResult res = runCli("td-lift --graph " + fixture("p4_graph.json") + " --td " + fixture("p4_td.json") +
                           " --mode torso -k 2 --clustering 2 -d 2 --eta 1 --dump-stages " + dir + " --out " +
                           tmpFile("p4_stage_out.json"));
    REQUIRE(res.exitCode == 0);
    CHECK(fs::exists(fs::path(dir) / "simplified.json"));
    CHECK(fs::exists(fs::path(dir) / "tree-cut.json"));
    fs::remove_all(dir);
}

TEST_CASE("merge-cut reads side A from the assigned vertices") {
    std::string a = tmpFile("merge_a.json"), b = tmpFile("merge_b.json"), out = tmpFile("merge_out.json");
    {
        std::ofstream(a) << R"({"k": 2, "colors": [1, 0, 0, 0]})";
        std::ofstream(b) << R"({"k": 2, "colors": [0, 1, 1, 2]})";
    }
    RunResult res = runCli("merge-cut --graph " + fixture("p4_graph.json") + " --colors-a " + a +
                           " --colors-b " + b + " -k 2 --clustering 2 --out " + out);
    REQUIRE(res.exitCode == 0);
    nlohmann::json report = nlohmann::json::parse(res.out);
    CHECK(report["ok"] == true);
    CHECK(report["cutOrder"] == 1);
    nlohmann::json merged = nlohmann::json::parse(slurp(out));
    CHECK(merged["colors"][0] != 0);
}

TEST_CASE("oracle min-colors answers on fixtures") {
    RunResult res = runCli("oracle min-colors --graph " + fixture("c4_graph.json") + " --clustering 1");
    REQUIRE(res.exitCode == 0);
    CHECK(nlohmann::json::parse(res.out)["minColors"] == 2);

    RunResult k4 = runCli("oracle min-colors --graph " + fixture("k4_graph.json") + " --clustering 1 --jobs 2");
    CHECK(nlohmann::json::parse(k4.out)["minColors"] == 4);
}

TEST_CASE("oracle immersion answers on fixtures") {
    RunResult yes = runCli("oracle immersion --graph " + fixture("k4_graph.json") + " --pattern " +
                           fixture("k3_graph.json"));
    REQUIRE(yes.exitCode == 0);
    CHECK(nlohmann::json::parse(yes.out)["found"] == true);

    RunResult no = runCli("oracle immersion --graph " + fixture("p3_graph.json") + " --pattern " +
                          fixture("k3_graph.json"));
    CHECK(nlohmann::json::parse(no.out)["found"] == false);
}

TEST_CASE("generators emit JSON and DOT") {
    RunResult json = runCli("gen apex-blocker --base " + fixture("k1_graph.json") + " --eta 2");
    REQUIRE(json.exitCode == 0);
    nlohmann::json g = nlohmann::json::parse(json.out);
    CHECK(g["vertices"].size() == 3);
    CHECK(g["edges"].size() == 2);

    RunResult dot = runCli("gen layered-blocker --base " + fixture("k1_graph.json") + " --clustering 1 --dot");
    REQUIRE(dot.exitCode == 0);
    CHECK(dot.out.rfind("graph G {", 0) == 0);
}

TEST_CASE("reruns are byte-identical") {
    std::string out1 = tmpFile("det1.json"), out2 = tmpFile("det2.json");
    std::string args = "td-lift --graph " + fixture("p4_graph.json") + " --td " + fixture("p4_td.json") +
                       " --mode torso -k 2 --clustering 2 -d 2 --eta 1 --out ";
    RunResult r1 = runCli(args + out1);
    RunResult r2 = runCli(args + out2);
    REQUIRE(r1.exitCode == 0);
    REQUIRE(r2.exitCode == 0);
    CHECK(r1.out == r2.out);
    CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("missing subcommand is a usage error") {
    RunResult res = runCli("");
    CHECK(res.exitCode == 2);
}
