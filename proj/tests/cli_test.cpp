#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "setmatch/io.hpp"

using namespace setmatch;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("setmatch_cli_" + std::to_string(counter_++))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& body) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << body;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

}  // namespace

TEST_CASE("check ekr") {
    const Run r = run({"check", "ekr", "--n", "3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bound 4, achieved 4") != std::string::npos);
    CHECK(r.out.find("verified") != std::string::npos);
    const Run j = run({"check", "ekr", "--n", "3"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out).at("schema") == "setmatch/1");
}

TEST_CASE("check chvatal at n = 4") {
    const Run r = run({"check", "chvatal", "--n", "4", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("168 down-sets, 0 counterexamples") != std::string::npos);
}

TEST_CASE("sampled checks record their seed") {
    const Run r = run({"check", "crossiu-sum", "--n", "4", "--samples", "50", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("seed") == 9);
}

TEST_CASE("self-match on the empty-set family") {
    TempDir dir;
    const std::string a = dir.write("a.json", R"({"n":2,"sets":[[]]})");
    const Run r = run({"self-match", a});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("pairs").empty());
    CHECK(j.contains("leftover"));
    const Run t = run({"self-match", a, "--format", "text"});
    CHECK(t.out.find("odd") != std::string::npos);
}

TEST_CASE("match, weighted-match and verify round trip") {
    TempDir dir;
    const std::string f = dir.write("f.txt", "n=3\n-\n1\n");
    const std::string g = dir.write("g.json", R"({"n":3,"sets":[[],[2],[3],[2,3]]})");
    const std::string phi = dir.file("phi.json");
    CHECK(run({"match", f, g, "--out", phi}).code == 0);
    CHECK(run({"verify", phi, f, g}).code == 0);
    CHECK(run({"verify", phi, g, f}).code == 1);

    const std::string p = dir.file("p.json");
    CHECK(run({"weighted-match", f, g, "--out", p}).code == 0);
    CHECK(run({"verify", p, f, g, "--format", "text"}).out == "ok\n");

    const std::string m = dir.file("m.json");
    CHECK(run({"self-match", g, "--out", m}).code == 0);
    CHECK(run({"verify", m, g}).code == 0);
    const std::string bad = dir.write("bad.json", R"({"schema":"setmatch/1","kind":"self","n":3,"pairs":[[2,4]]})");
    const Run rejected = run({"verify", bad, g});
    CHECK(rejected.code == 1);
    CHECK(nlohmann::json::parse(rejected.out).at("ok") == false);
}

TEST_CASE("closure output re-parses") {
    TempDir dir;
    const std::string f = dir.write("f.txt", "n=3\n1,2\n");
    const Run down = run({"closure", "--down", f});
    CHECK(down.code == 0);
    CHECK(parse_family(down.out) == Family(3, {{}, {1}, {2}, {1, 2}}));
    const Run up = run({"closure", "--up", f, "--format", "text"});
    CHECK(parse_family(up.out) == Family(3, {{1, 2}, {1, 2, 3}}));
    CHECK(run({"closure", f}).code == 2);
    CHECK(run({"closure", "--up", "--down", f}).code == 2);
}

TEST_CASE("enumerate and m-table") {
    const Run e = run({"enumerate-downsets", "--n", "3"});
    CHECK(e.code == 0);
    CHECK(nlohmann::json::parse(e.out).at("count") == 20);
    const Run t = run({"m-table", "--n", "3", "--t", "1", "--s", "1", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("3\t1\t0\t4\n") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2 naming the token") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    const Run cap = run({"enumerate-downsets", "--n", "9"});
    CHECK(cap.code == 2);
    CHECK(cap.err.find("9") != std::string::npos);
    const Run missing = run({"self-match", "/nonexistent/a.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("/nonexistent/a.json") != std::string::npos);
    TempDir dir;
    const std::string bad = dir.write("bad.txt", "n=3\n1,7\n");
    const Run malformed = run({"self-match", bad});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("'7'") != std::string::npos);
    const Run claim = run({"check", "nope", "--n", "3"});
    CHECK(claim.code == 2);
    CHECK(claim.err.find("nope") != std::string::npos);
    const Run range = run({"check", "ekr", "--n", "5"});
    CHECK(range.code == 2);
    CHECK(range.err.find("n must be in") != std::string::npos);
    CHECK(run({"check", "ekr", "--n", "3", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
