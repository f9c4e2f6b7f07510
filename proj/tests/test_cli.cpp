#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sandlab/json_io.hpp"

using sandlab::Json;
using sandlab::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("enumerate row counts") {
    auto r = cli({"enumerate", "--family", "wheel", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("config,level,weight\n", 0) == 0);
    CHECK(lines(r.out) == 46);
    r = cli({"enumerate", "--family", "wheel", "--n", "4", "--model", "ssm"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 47);
    r = cli({"enumerate", "--family", "fan", "--n", "4"});
    CHECK(lines(r.out) == 22);
    r = cli({"--format", "json", "enumerate", "--family", "fan", "--n", "4"});
    const auto j = Json::parse(r.out);
    CHECK(j["count"] == 21);
    CHECK(j["graph"]["kind"] == "fan");
    CHECK(j["rows"].size() == 21);
    CHECK(cli({"enumerate", "--family", "wheel", "--n", "2"}).code == 2);
    CHECK(cli({"enumerate", "--family", "wheel", "--n", "8", "--cap", "10"}).code == 2);
}

TEST_CASE("custom graph enumerate") {
    const auto r = cli({"enumerate", "--family", "custom", "--graph",
                        R"({"kind":"custom","n":2,"edges":[[0,1],[1,2],[0,2]]})"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) == 4);
}

TEST_CASE("biject goldens") {
    auto r = cli({"biject", "--map", "wheel-to-subgraph", "--config", "1,2,0,1,2,1,2,0", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find(R"({"vertices":[2,5,6,7],"edges":[[6,7]]})") != std::string::npos);
    r = cli({"biject", "--map", "fan-to-word", "--config", "1,1,0,1,2,2,0,2,1", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Lu Lu R R Lm Lu R Lm") != std::string::npos);
    r = cli({"biject", "--map", "word-to-fan", "--word", "Lu Lu R R Lm Lu R Lm"});
    CHECK(r.code == 0);
    CHECK(cli({"biject", "--map", "fan-to-word", "--config", "0,0,0"}).code == 2);
    r = cli({"biject", "--map", "wheel-to-minimal", "--config", "1,2,0,1,2,1,2,0"});
    CHECK(r.out == "1,2,0,1,2,1,1,0\n");
    CHECK(cli({"biject", "--map", "wheel-to-minimal", "--config", "1,2,0,1,2,1,2,0", "--check"}).code == 2);
    CHECK(cli({"biject", "--map", "wheel-to-orientation", "--config", "1,2,0,1,2,1,2,0"}).code == 2);
    r = cli({"biject", "--map", "wheel-to-orientation", "--config", "1,1,1"});
    CHECK(r.out == "{\"n\":3,\"arcs\":[[2,1],[1,3],[3,2]],\"in_degrees\":[1,1,1]}\n");
    r = cli({"biject", "--map", "pmo-to-wheel", "--pmo", R"({"n":8,"ccw_edges":[2,5,6,7],"marks":[7]})", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,2,0,1,2,1,2,0\n");
    CHECK(cli({"biject", "--map", "nope", "--config", "0"}).code == 2);
}

TEST_CASE("tables") {
    auto r = cli({"table", "--which", "differed-delannoy", "--n-max", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,k,count\n1,1,2\n2,1,4\n2,2,6\n3,1,6\n3,2,24\n3,3,20\n");
    const auto e = cli({"table", "--which", "differed-delannoy", "--n-max", "3", "--method", "enumerate"});
    CHECK(e.out == r.out);
    r = cli({"table", "--which", "fan-levels", "--n-max", "5"});
    const auto f = cli({"table", "--which", "fan-levels", "--n-max", "5", "--method", "enumerate"});
    CHECK(r.code == 0);
    CHECK(r.out == f.out);
    CHECK(cli({"table", "--which", "kimberling", "--n-max", "2"}).out.find("2,1,3\n") != std::string::npos);
}

TEST_CASE("simulate is deterministic per seed") {
    const std::vector<std::string> args{"simulate", "--family", "wheel", "--n", "4", "--model", "ssm",
                                        "--steps", "2000", "--seed", "11", "--burn-in", "50"};
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = Json::parse(a.out);
    CHECK(j["rng"] == "mt19937_64/splitmix64-streams/v1");
    long long total = 0;
    for (const auto& v : j["visits"]) total += v["count"].get<long long>();
    // burn-in steps are part of --steps but are not counted
    CHECK(total == 1950);
    CHECK(cli({"simulate", "--family", "wheel", "--n", "4", "--steps", "10", "--mu", "1,x,1,1"}).code == 2);
}

TEST_CASE("verify exit codes") {
    auto r = cli({"verify", "--theorem", "thm-3.2", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["status"] == "pass");
    CHECK(cli({"verify", "--theorem", "bogus"}).code == 2);
    CHECK(cli({"verify"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("output file") {
    const std::string path = "test_cli_output.csv";
    std::remove(path.c_str());
    const auto r = cli({"--output", path, "table", "--which", "differed-delannoy", "--n-max", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == "n,k,count\n1,1,2\n");
    std::remove(path.c_str());
}
