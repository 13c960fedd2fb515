#include "doctest.h"

#include "cli.hh"

#include <iasl/graph.hh>
#include <iasl/json.hh>
#include <iasl/labeling.hh>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace iasl;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        args.insert(args.begin(), "iasl-lab");
        std::vector<const char *> argv;
        for (const auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return Run{code, out.str(), err.str()};
    }

    auto data(const char * name) -> std::string { return std::string{IASL_TEST_DATA} + "/" + name; }

    auto slurp(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in{p};
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("verify")
    {
        auto ok = run({"verify", "--class", "iasgl", data("k12.graph"), data("k12.labeling")});
        CHECK(ok.code == 0);
        CHECK(ok.out.find("verdict: true") != std::string::npos);

        auto bad = run({"verify", "--class", "iasgl", data("k12.graph"), data("k12_bad.labeling"), "--json"});
        CHECK(bad.code == 1);
        auto j = Json::parse(bad.out);
        CHECK(j["schema"] == "iasl-lab/1");
        CHECK(j["verdict"] == false);
        CHECK_FALSE(j["violations"].empty());

        CHECK(run({"verify", "--class", "uniform:2", data("k12.graph"), data("k12.labeling")}).code == 1);
        CHECK(run({"verify", "--class", "iasi", data("k12.graph"), data("k12.labeling")}).code == 0);
        CHECK(run({"verify", "--class", "top-iasgl", data("k12.graph"), data("k12.labeling")}).code == 0);
        CHECK(run({"verify", "--class", "graceful", data("k12.graph"), data("k12.labeling")}).code == 2);
    }

    TEST_CASE("input errors exit 2 with one line")
    {
        auto missing = run({"verify", "--class", "iasl", data("nope.graph"), data("k12.labeling")});
        CHECK(missing.code == 2);
        auto broken = run({"search", data("broken.graph"), "{0,1}"});
        CHECK(broken.code == 2);
        CHECK(broken.err.find("line 2") != std::string::npos);
        CHECK(std::count(broken.err.begin(), broken.err.end(), '\n') == 1);
        CHECK(run({"classify", "{1,2}"}).code == 2);
        CHECK(run({"classify", "{0,1}", "--bogus"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"oracle", "T-none"}).code == 2);
        CHECK(run({"enum-topologies", "{0,1,2,3,4}"}).code == 2);
    }

    TEST_CASE("classify")
    {
        auto r = run({"classify", "{0,1,2}", "--json"});
        CHECK(r.code == 0);
        auto j = Json::parse(r.out);
        CHECK(j["rho"] == 3);
        CHECK(j["rho_prime"] == 1);
        CHECK(j["x_is_sumset"] == true);
        CHECK(j["subsets"].size() == 7);
    }

    TEST_CASE("search")
    {
        auto c6 = run({"search", "--mode", "top-iasgl", data("c6.graph"), "{0,1,2}", "--json"});
        CHECK(c6.code == 1);
        CHECK(Json::parse(c6.out)["found"] == false);

        auto k16 = run({"--json", "search", data("k16.graph"), "{0,1,2}"});
        CHECK(k16.code == 0);
        auto j = Json::parse(k16.out);
        CHECK(j["found"] == true);
        CHECK(j["labeling"]["labels"].size() == 7);
        CHECK(j.contains("screen"));

        auto text = run({"search", data("k16.graph"), "{0,1,2}"});
        CHECK(text.out.find("found: true") != std::string::npos);
    }

    TEST_CASE("realize writes files that parse back")
    {
        auto dir = std::filesystem::temp_directory_path() / "iasl-lab-cli-test";
        std::filesystem::create_directories(dir);
        auto gp = (dir / "g.txt").string();
        auto fp = (dir / "f.txt").string();
        auto r = run({"realize", data("chain.topology"), "--graph-out", gp, "--labeling-out", fp});
        CHECK(r.code == 0);
        auto g = parse_graph(slurp(gp));
        auto f = parse_labeling(slurp(fp));
        CHECK(g.edge_count() == 2);
        CHECK(verify_iasl(g, f).verdict);
        CHECK(emit_graph(g) == slurp(gp));
        CHECK(emit_labeling(f, g) == slurp(fp));
        CHECK(run({"verify", "--class", "top-iasl", gp, fp}).code == 0);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("enum-topologies")
    {
        auto r = run({"enum-topologies", "{0,1,2}", "--count"});
        CHECK(r.code == 0);
        CHECK(r.out == "29\n");
        CHECK(run({"enum-topologies", "{0,1}", "--with-zero", "--count"}).out == "2\n");
        auto j = Json::parse(run({"enum-topologies", "{0,1}", "--json"}).out);
        CHECK(j["count"] == 4);
        CHECK(j["topologies"].size() == 4);
    }

    TEST_CASE("min-ground-set")
    {
        auto r = run({"min-ground-set", "--mode", "iasgl", data("k12.graph"), "--max-element", "4", "--json"});
        CHECK(r.code == 0);
        CHECK(Json::parse(r.out)["ground_set"] == Json::array({0, 1}));
        CHECK(run({"min-ground-set", data("c6.graph"), "--max-element", "3"}).code == 1);
        CHECK(run({"min-ground-set", data("c6.graph"), "--max-element", "11"}).code == 2);
    }

    TEST_CASE("oracle")
    {
        auto r = run({"oracle", "P3", "T-tree", "--max-vertices", "5", "--json"});
        CHECK(r.code == 0);
        auto j = Json::parse(r.out);
        CHECK(j["suite_clean"] == true);
        REQUIRE(j["reports"].size() == 2);
        CHECK(j["reports"][0]["theorem_id"] == "P3");
        CHECK(j["reports"][0]["holds"] == "counterexample");
        CHECK_FALSE(j["reports"][0]["witnesses"].empty());

        auto table = run({"oracle", "all", "--max-vertices", "4", "--ground-set", "{0,1}"});
        CHECK(table.code == 0);
        CHECK(table.out.find("suite clean") != std::string::npos);
    }

    TEST_CASE("exit codes agree with the JSON verdict")
    {
        for (const char * g : {"k12.graph", "k16.graph", "c6.graph"})
            for (const char * mode : {"iasgl", "top-iasl", "top-iasgl"})
                for (const char * x : {"{0,1}", "{0,1,2}"}) {
                    auto r = run({"search", "--mode", mode, data(g), x, "--json"});
                    REQUIRE(r.code != 2);
                    CHECK((r.code == 0) == Json::parse(r.out)["found"].get<bool>());
                }
    }
}
