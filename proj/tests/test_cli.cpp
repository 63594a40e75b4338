#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gasket/cli.hpp"

using namespace gasket;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "gasket");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("words") {
    auto r = run({"words", "tm", "--n", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "101001000100\n");
    CHECK(run({"words", "type", "--kind", "A", "--n", "1"}).out == "BAC\n");
    CHECK(run({"words", "phi", "--kind", "A", "--word", "BAC"}).out == "CAB\n");
    CHECK(run({"words", "project", "--word", "BAC", "--axis", "sum"}).out == "101\n");
    auto j = nlohmann::json::parse(run({"words", "lambda", "--n", "6", "--format", "json"}).out);
    CHECK(j["word"] == "101001");
}

TEST_CASE("base") {
    auto r = run({"base", "invert", "(100)", "--tol", "1e-10"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("[1.46557") != std::string::npos);
    CHECK(r.out.find("x^3 - x^2 - 1") != std::string::npos);
    CHECK(run({"base", "invert", "--seq", "(10)"}).out.find("[1.61803") != std::string::npos);
    auto c = run({"base", "critical", "--format", "json"});
    CHECK(c.code == kExitOk);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["series"]["within"] == true);
    CHECK(j["inside_ladders"] == true);
    CHECK(j["reference"]["consistent"] == true);
    CHECK(run({"base", "delta", "--beta", "1.6", "--n", "8"}).out == "10101001\n");
}

TEST_CASE("adm") {
    auto j = nlohmann::json::parse(run({"adm", "check", "--beta", "1.6", "--word", "BAA", "--format", "json"}).out);
    CHECK(j["verdicts"][0]["status"] == "Violation");
    CHECK(j["verdicts"][0]["position"] == 1);
    auto e = run({"adm", "enumerate", "--beta", "1.6", "--m", "6", "--T", "6", "--format", "csv"});
    CHECK(e.code == kExitOk);
    CHECK(e.out.rfind("m,admissible,extendable\n1,3,3\n", 0) == 0);
}

TEST_CASE("enumeration output is identical across job counts") {
    auto a = run({"adm", "enumerate", "--beta", "1.6", "--m", "9", "--T", "9", "--words", "--format", "json"});
    auto b = run({"adm", "enumerate", "--beta", "1.6", "--m", "9", "--T", "9", "--words", "--format", "json",
                  "--jobs", "3"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out == run({"adm", "enumerate", "--beta", "1.6", "--m", "9", "--T", "9", "--words", "--format", "json"}).out);
}

TEST_CASE("verify exit codes") {
    auto p = run({"verify", "prop44", "--k", "2", "--context", "4"});
    CHECK(p.code == kExitOk);
    CHECK(p.out.find("result: PASS") != std::string::npos);
    CHECK(run({"verify", "lemma31", "--beta", "1.5", "--m", "10"}).code == kExitCounterexample);
    CHECK(run({"verify", "lemma33", "--beta", "1.7"}).code == kExitUsage);
    CHECK(run({"verify", "l50", "--n", "6"}).code == kExitOk);
}

TEST_CASE("geom") {
    auto r = run({"geom", "render", "--beta", "18/11", "--depth", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == read_file(std::string(GASKET_GOLDEN_DIR) + "/render_18_11_depth1.svg"));
    CHECK(run({"geom", "point", "--beta", "1.5", "--coding", "(BAC)"}).out == "(BAC) -> (18/19, 8/19)\n");
    CHECK(run({"geom", "unique", "--beta", "18/11", "--coding", "(BAC)"}).out == "(BAC): InUtilde\n");
}

TEST_CASE("analyze") {
    auto m = nlohmann::json::parse(run({"analyze", "mahler", "--format", "json"}).out);
    CHECK(m["within"] == true);
    auto t = run({"analyze", "theorem-a"});
    CHECK(t.code == kExitOk);
    CHECK(t.out.find("96 codings, 0 mismatches") != std::string::npos);
    auto x = run({"analyze", "xn", "--n", "2", "--k", "4", "--beta", "1.6"});
    CHECK(x.code == kExitOk);
    CHECK(x.out.rfind("32 words", 0) == 0);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"words", "tm"}).code == kExitUsage);
    CHECK(run({"words", "tm", "--n", "0"}).code == kExitUsage);
    CHECK(run({"base", "delta", "--beta", "3"}).code == kExitUsage);
    CHECK(run({"words", "tm", "--n", "2", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"words", "tm", "--n", "2", "--format", "csv"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}
