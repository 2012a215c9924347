#include "stab/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace stab;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("cli_test_" + name)
    {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

int run(std::vector<std::string> args, std::string* stdout_text = nullptr)
{
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    if (stdout_text)
        *stdout_text = out.str();
    return code;
}

} // namespace

TEST_CASE("analyze prints verdicts and honors --expect")
{
    TempFile c5("c5.dimacs", write_dimacs(cycle(5)));
    std::string text;
    REQUIRE(run({"analyze", "--xi", "chi", c5.path}, &text) == 0);
    REQUIRE(text.find("stable=0") != std::string::npos);
    REQUIRE(text.find("unfrozen=1") != std::string::npos);

    REQUIRE(run({"analyze", "--xi", "chi", "--expect", "unfrozen", c5.path})
        == 0);
    REQUIRE(run({"analyze", "--xi", "chi", "--expect", "stable", c5.path})
        == 1);
}

TEST_CASE("analyze json output round-trips and is byte-stable")
{
    TempFile p3("p3.dimacs", write_dimacs(path(3)));
    std::string a, b;
    REQUIRE(run({"analyze", "--xi", "beta", "--json", p3.path}, &a) == 0);
    REQUIRE(run({"analyze", "--xi", "beta", "--json", p3.path}, &b) == 0);
    REQUIRE(a == b);
    auto j = nlohmann::json::parse(a);
    auto rep = report_from_json(j);
    REQUIRE(rep.value == 1);
    REQUIRE(j["xi"] == "beta");
}

TEST_CASE("gadget subcommand emits graph and provenance sidecar")
{
    TempFile k3("k3.dimacs", write_dimacs(complete(3)));
    std::string out_path = "cli_test_out.dimacs";
    REQUIRE(run({"gadget", "beta-stabilize", "--edges", "all", "--out",
               out_path, k3.path})
        == 0);
    std::ifstream gin(out_path);
    Graph g = parse_dimacs(gin);
    REQUIRE(g.num_vertices() == 3 + 4 * 3);
    Solver solver;
    REQUIRE(solver.value(g, GraphNumber::Beta) == 8); // beta(K3) + 2|E|
    std::ifstream pin(out_path + ".provenance.json");
    REQUIRE(pin.good());
    auto j = nlohmann::json::parse(pin);
    REQUIRE(j["value_shift"] == 6);
    std::remove(out_path.c_str());
    std::remove((out_path + ".provenance.json").c_str());
}

TEST_CASE("gadget edge selector accepts explicit pairs")
{
    TempFile k3("k3b.dimacs", write_dimacs(complete(3)));
    std::string text;
    REQUIRE(
        run({"gadget", "beta-stabilize", "--edges", "0-1", k3.path}, &text)
        == 0);
    Graph g = parse_dimacs(text);
    REQUIRE(g.num_vertices() == 7);
}

TEST_CASE("reduce with --verify sets the exit code")
{
    TempFile k2("k2.dimacs", write_dimacs(complete(2)));
    TempFile i2("i2.dimacs", write_dimacs(empty_graph(2)));
    std::string text;
    REQUIRE(run({"reduce", "beta-stability-compare", k2.path, i2.path,
               "--verify"},
                &text)
        == 0);
    REQUIRE(text.find("verified") != std::string::npos);
    REQUIRE(run({"reduce", "union-double", k2.path, "--verify"}) == 0);
    REQUIRE(run({"reduce", "vstab-to-stab", k2.path, "--verify"}) == 0);
}

TEST_CASE("formula subcommand")
{
    std::string text;
    REQUIRE(run({"formula", "random", "--vars", "4", "--clauses", "5",
               "--seed", "7"},
                &text)
        == 0);
    CnfFormula f = parse_dimacs_cnf(text);
    REQUIRE(f.num_clauses() == 5);
    REQUIRE(f.is_exact_kcnf(3));

    TempFile cnf("f.cnf", text);
    std::string sat_text;
    REQUIRE(run({"formula", "sat", cnf.path}, &sat_text) == 0);
    REQUIRE((sat_text == "sat\n" || sat_text == "unsat\n"));
    REQUIRE(run({"formula", "stability", cnf.path}, &text) == 0);
        REQUIRE(run({"formula", "to3cnf", cnf.path}, &text) == 0);
}

TEST_CASE("verify subcommand runs laws")
{
    std::string text;
    REQUIRE(run({"verify", "--list"}, &text) == 0);
    REQUIRE(text.find("obs1") != std::string::npos);
    REQUIRE(text.find("thm9.end2end") != std::string::npos);

    REQUIRE(run({"verify", "lem6", "--max-n", "3"}, &text) == 0);
    REQUIRE(text.find("[pass] lem6") != std::string::npos);

    REQUIRE(run({"verify", "obs1", "--max-n", "3", "--json"}, &text) == 0);
    auto j = nlohmann::json::parse(text);
    REQUIRE(j[0]["law"] == "obs1");
    REQUIRE(j[0]["passed"] == true);

    REQUIRE(run({"verify", "no-such-law"}) == 2);
}

TEST_CASE("usage and parse errors exit 2")
{
    REQUIRE(run({"analyze"}) == 2);
    REQUIRE(run({"analyze", "--xi", "chi", "missing-file.dimacs"}) == 2);
    TempFile bad("bad.dimacs", "p edge 2 1\ne 1 1\n");
    REQUIRE(run({"analyze", "--xi", "chi", bad.path}) == 2);
    REQUIRE(run({"nonsense"}) == 2);
}

TEST_CASE("budget exhaustion exits 3")
{
    TempFile big("big.dimacs", write_dimacs(random_graph(40, 0.5, 5)));
    setenv("STAB_NODE_BUDGET", "2", 1);
    int code = run({"analyze", "--xi", "chi", big.path});
    unsetenv("STAB_NODE_BUDGET");
    REQUIRE(code == 3);
}
