#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "bnlab/cli.hpp"
#include "bnlab/numeric.hpp"

using namespace bnlab;
namespace fs = std::filesystem;

namespace {

// Points BNLAB_CACHE at a fresh directory for the lifetime of the object.
struct TempCache {
    fs::path dir;
    TempCache() {
        dir = fs::temp_directory_path() / ("bnlab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
        fs::remove_all(dir);
        ::setenv("BNLAB_CACHE", dir.c_str(), 1);
    }
    ~TempCache() {
        fs::remove_all(dir);
        ::unsetenv("BNLAB_CACHE");
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

Json parse(const RunOutcome& o) { return Json::parse(o.out); }

}  // namespace

TEST_CASE("loci in json") {
    auto o = run({"loci", "--genus", "23", "--json"});
    REQUIRE(o.exit_code == 0);
    auto j = parse(o);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "params", "results", "complete", "caps", "version"});
    CHECK(j["results"]["expected"] == Json::parse("[[1,12],[2,17],[3,20],[4,22]]"));

    auto g8 = parse(run({"loci", "--genus", "8"}));
    CHECK(g8["results"]["conjectured"] == Json::parse("[[2,7]]"));
    CHECK(g8["results"]["expected"] == Json::parse("[[1,4],[2,7]]"));
}

TEST_CASE("identical invocations give identical bytes, and json round-trips") {
    TempCache tc;
    for (auto args : std::vector<std::vector<std::string>>{
             {"loci", "--genus", "17"},
             {"lattice", "--genus", "23", "--series", "4,22", "invariants"},
             {"distinguish", "--genus", "16", "--no-cache"},
             {"check", "--mode", "l3", "--genus", "56", "--series", "2,39", "--other", "3,44"},
             {"region", "--genus", "30", "--step", "1/4"}}) {
        auto a = run(args), b = run(args);
        CHECK(a.out == b.out);
        auto j = Json::parse(a.out);
        CHECK(j.dump(2) + "\n" == a.out);
    }
}

TEST_CASE("csv output") {
    auto o = run({"region", "--genus", "10", "--step", "1", "--format", "csv"});
    REQUIRE(o.exit_code == 0);
    CHECK(o.out.substr(0, o.out.find('\n')) == "r,gamma_rho,gamma_delta");

    auto l = run({"loci", "--genus", "12", "--format", "csv"});
    CHECK(std::count(l.out.begin(), l.out.end(), '\n') == 4);

    auto bad = run({"classify", "--genus", "12", "--r", "2", "--d", "9", "--format", "csv"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("UnsupportedFormat") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"loci"}).exit_code == 2);
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({"loci", "--genus", "10", "--format", "yaml"}).exit_code == 2);
    CHECK(run({"loci", "-g", "10"}).exit_code == 2);
    CHECK(run({"lattice", "--gram", "2,0,2", "disc"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);

    // an L3 failure is a failed condition
    CHECK(run({"check", "--mode", "l3", "--genus", "56", "--series", "2,39", "--other", "3,44"}).exit_code == 1);
    CHECK(run({"check", "--mode", "l2", "--genus", "14", "--series", "2,11"}).exit_code == 0);

    // a nef search cut short leaves the run incomplete
    auto inc = run({"lattice", "--gram", "4,2,-2", "invariants", "--nef-cap", "1"});
    REQUIRE(inc.report);
    CHECK(inc.exit_code == (inc.report->complete ? 0 : 3));
}

TEST_CASE("scan results are cached and replayed") {
    TempCache tc;
    std::vector<std::string> args{"scan-l2", "--from", "50", "--to", "60"};
    auto fresh = run(args);
    REQUIRE(fresh.report);
    CHECK_FALSE(fresh.report->from_cache);
    CHECK(fresh.exit_code == 1);
    auto again = run(args);
    REQUIRE(again.report);
    CHECK(again.report->from_cache);
    CHECK(again.out == fresh.out);
    CHECK(again.exit_code == fresh.exit_code);
    CHECK(run({"scan-l2", "--from", "50", "--to", "60", "--format", "csv"}).out ==
          run({"scan-l2", "--from", "50", "--to", "60", "--format", "csv", "--no-cache"}).out);

    // the replay really comes from the file: edit it and the edit shows up
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(tc.dir)) files.push_back(e.path());
    REQUIRE(files.size() == 1);
    Json doc;
    {
        std::ifstream in(files[0]);
        doc = Json::parse(in);
    }
    doc["report"]["results"]["exceptions"] = Json::array({12345});
    {
        std::ofstream out(files[0]);
        out << doc.dump(2);
    }
    auto tampered = parse(run(args));
    CHECK(tampered["results"]["exceptions"] == Json::array({12345}));
    auto bypass = parse(run({"scan-l2", "--from", "50", "--to", "60", "--no-cache"}));
    CHECK(bypass["results"]["exceptions"] != Json::array({12345}));

    // --jobs is not part of the key
    CHECK(run({"scan-l2", "--from", "50", "--to", "60", "--jobs", "3"}).report->from_cache);
}

TEST_CASE("cache keys") {
    RunReport a;
    a.command = "scan-l2";
    a.params = {{"from", 2}, {"to", 10}};
    RunReport b = a;
    CHECK(cache_key(a) == cache_key(b));
    b.params["to"] = 11;
    CHECK(cache_key(a) != cache_key(b));
    b = a;
    b.version = "other";
    CHECK(cache_key(a) != cache_key(b));
    // FNV-1a reference values
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("configuration file") {
    auto c = parse_config("# caps\nnef_cap = 50\nlift_cap=30  # trailing\n\nbox = \"200\"\n");
    CHECK(c.get_int("nef_cap") == 50);
    CHECK(c.get_int("lift_cap") == 30);
    CHECK(c.get_int("box") == 200);
    CHECK_FALSE(c.get_int("missing"));
    CHECK_THROWS_AS(parse_config("no equals sign"), Error);
    CHECK_THROWS_AS(parse_config("x = abc").get_int("x"), Error);

    auto path = fs::temp_directory_path() / ("bnlab-cfg-" + std::to_string(::getpid()) + ".toml");
    {
        std::ofstream out(path);
        out << "nef_cap = 77\nlift_cap = 40\n";
    }
    auto o = parse(run({"lattice", "--genus", "18", "--series", "2,13", "invariants", "--config", path.string()}));
    CHECK(o["caps"]["nef_cap"] == 77);
    auto f = parse(run({"lattice", "--genus", "18", "--series", "2,13", "invariants", "--config", path.string(),
                        "--nef-cap", "90"}));
    CHECK(f["caps"]["nef_cap"] == 90);
    auto l = parse(run({"lift-candidates", "--genus", "30", "--series", "3,25", "--config", path.string()}));
    CHECK(l["caps"]["lift_cap"] == 40);
    fs::remove(path);
}

TEST_CASE("lattice subcommands") {
    auto iso = parse(run({"lattice", "--genus", "18", "--series", "2,13", "isotropic"}));
    CHECK(iso["results"]["isotropic"] == false);
    CHECK(iso["results"]["disc"] == -101);
    auto rep = parse(run({"lattice", "--genus", "16", "--series", "3,14", "represents", "--n", "2"}));
    CHECK(rep["results"]["witness"].is_null());
    auto emb = parse(run({"lattice", "--genus", "56", "--series", "2,39", "embeds", "--target", "6,49"}));
    CHECK(emb["results"]["embeds"] == false);
    auto inv = parse(run({"lattice", "--genus", "23", "--series", "4,22", "invariants"}));
    CHECK(inv["results"]["m"] == 6);
    CHECK(run({"lattice", "--genus", "18", "disc"}).exit_code == 2);
}

TEST_CASE("remaining subcommands") {
    TempCache tc;
    auto c = parse(run({"classify", "--genus", "14", "--r", "2", "--d", "11"}));
    CHECK(c["results"]["noncomputing"] == true);
    auto s = parse(run({"secant-scan", "--max-genus", "23"}));
    CHECK(s["results"]["hits"].size() == 3);
    auto k = parse(run({"counterexample", "--a", "6", "--b", "4"}));
    CHECK(k["results"]["genus"] == 19);
    auto t = parse(run({"threshold", "--genus", "18", "--gamma", "8", "--m", "2", "--mu", "1"}));
    CHECK(t["results"]["value"] == "16");
    auto st = parse(run({"threshold", "--kind", "strategy", "--genus", "16", "--r", "3"}));
    CHECK(st["results"]["value"] == "95/6");
    auto f = run({"filtrations", "--genus", "18", "--d", "16", "--gamma", "8", "--m", "2", "--mu", "1", "--format", "csv"});
    CHECK(f.out.find("F124,16,1") != std::string::npos);
    auto d = parse(run({"distinguish", "--genus", "21"}));
    CHECK(d["results"]["inconclusive"].size() == 2);
    auto one = parse(run({"distinguish", "--genus", "16", "--a", "3,14", "--b", "2,12"}));
    CHECK(one["results"]["traces"][0]["verdict"] == "NonContainmentShown");
    CHECK(run({"distinguish", "--genus", "16", "--a", "3,14"}).exit_code == 2);
}
