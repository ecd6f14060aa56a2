#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "threshold_lab/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = tlab::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json parse_out(const CliResult& r) {
    REQUIRE(!r.out.empty());
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("pe matches the closed forms") {
    CliResult r = cli({"pe", "Bw", "-n", "10"});  // triangle
    CHECK(r.code == 0);
    json doc = parse_out(r);
    CHECK(doc["result"]["p"]["exact"] == json({{"num", "1"}, {"den", "240"}, {"root", 3}}));

    r = cli({"pe", "Bg", "-n", "10"});  // path on 3 vertices
    CHECK(r.code == 0);
    doc = parse_out(r);
    CHECK(doc["result"]["p"]["exact"] == json({{"num", "1"}, {"den", "720"}, {"root", 2}}));
}

TEST_CASE("pestar dominates pe") {
    json pe = parse_out(cli({"pe", "Bg", "-n", "100"}));
    json star = parse_out(cli({"pestar", "Bg", "-n", "100"}));
    CHECK(star["result"]["p"]["log2"].get<double>() >=
          pe["result"]["p"]["log2"].get<double>() - 1e-12);
}

TEST_CASE("sparse-check reports a witness") {
    CliResult r = cli({"sparse-check", "C~", "-n", "100", "--q", "1/1000"});  // K4, far from sparse
    CHECK(r.code == 0);
    json doc = parse_out(r);
    CHECK(doc["result"]["sparse"] == false);
    CHECK(doc["result"]["witness"].is_object());

    r = cli({"sparse-check", "A_", "-n", "100", "--q", "1/2"});
    CHECK(parse_out(r)["result"]["sparse"] == true);
}

TEST_CASE("census lists the classes") {
    json doc = parse_out(cli({"census", "Bw"}));
    CHECK(doc["result"]["class_count"] == 3);  // K2, P3, K3
    CHECK(doc["result"]["classes"][2]["aut"] == "6");
}

TEST_CASE("decompose yields a chain") {
    CliResult r = cli({"decompose", "Bg", "-n", "64", "--q", "1/8"});
    CHECK(r.code == 0);
    json doc = parse_out(r);
    CHECK(doc["result"]["chain"].front().empty());
    CHECK(doc["result"]["chain"].back().size() == 3);
    CHECK(doc["result"]["steps"].size() >= 1);
}

TEST_CASE("scan over a family file") {
    const std::string path = "cli_scan_family.g6";
    {
        std::ofstream f(path);
        f << "# two patterns\nBw\nBg\n";
    }
    json doc = parse_out(cli({"scan", path, "-n", "100"}));
    std::remove(path.c_str());
    REQUIRE(doc["result"].size() == 2);
    for (const auto& row : doc["result"]) CHECK(row.contains("ratio_log2"));
}

TEST_CASE("pc-estimate is seed reproducible") {
    std::vector<std::string> args = {"pc-estimate", "A_", "-n",     "20",
                                     "--samples",   "500", "--seed", "7"};
    CliResult a = cli(args);
    CliResult b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_out(a)["result"]["conclusive"] == true);

    // starving the probe budget must surface as exit 3
    CliResult c = cli({"pc-estimate", "A_", "-n", "20", "--samples", "100", "--max-probes", "2",
                       "--rel-width", "0.0001"});
    CHECK(c.code == 3);
    CHECK(parse_out(c)["result"]["conclusive"] == false);
}

TEST_CASE("verify subcommand") {
    CliResult r = cli({"verify", "--suite", "forest-count"});
    CHECK(r.code == 0);
    json doc = parse_out(r);
    CHECK(doc["result"]["counts"]["checked"] == 28);
    CHECK(doc["result"]["counts"]["failed"] == 0);

    CHECK(cli({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({"pe", "@@@", "-n", "10"}).code == 2);       // malformed graph6
    CHECK(cli({"pe", "Bw"}).code == 2);                    // missing -n
    CHECK(cli({"unknown-subcommand"}).code == 2);
    CHECK(cli({"pe", "Bw", "-n", "10", "--theta", "x"}).code == 2);
    CliResult help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("pc-estimate") != std::string::npos);
}

TEST_CASE("budget errors exit 3") {
    // clique on 8 vertices has 28 edges, over the default census cap
    CliResult r = cli({"census", "G~~~~{"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("cache round trip") {
    const std::string dir = "cli_cache_dir";
    setenv("THRESHOLD_LAB_CACHE", dir.c_str(), 1);
    CliResult a = cli({"pe", "Bw", "-n", "12"});
    CliResult b = cli({"pe", "Bw", "-n", "12"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);  // replayed byte for byte

    // same input via a file hits the same cache entry
    const std::string gpath = "cli_cache_graph.g6";
    {
        std::ofstream f(gpath);
        f << "Bw\n";
    }
    CliResult c = cli({"pe", gpath, "-n", "12"});
    CHECK(c.out == a.out);
    std::remove(gpath.c_str());

    CliResult d = cli({"pe", "Bw", "-n", "12", "--no-cache"});
    CHECK(d.out == a.out);  // same computation, independent of the cache

    unsetenv("THRESHOLD_LAB_CACHE");
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
}

TEST_CASE("out file redirection") {
    const std::string path = "cli_out.json";
    CliResult r = cli({"pe", "Bw", "-n", "10", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json doc = json::parse(f);
    CHECK(doc["command"] == "pe");
    f.close();
    std::remove(path.c_str());
}
