#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <univ/cli.hpp>
#include <univ/nodal.hpp>

using univ::Rational;
using univ::cli::Json;

namespace
{

struct Run
{
    int code = 0;
    std::string out;
    std::string err;

    [[nodiscard]] Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string &stdin_text = "")
{
    args.insert(args.begin(), "univ");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = univ::cli::run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("node-polys")
{
    const auto r = run({"node-polys", "--max-delta", "1"});
    REQUIRE(r.code == 0);
    const auto doc = r.json();
    CHECK(doc["command"] == "node-polys");
    CHECK(doc["order"] == 1);
    const auto &polys = doc["payload"]["polynomials"];
    REQUIRE(polys.size() == 2);
    CHECK(polys[1]["text"] == "3*L2+2*LK+c2");
    CHECK(polys[1]["terms"] == Json({{"0,0,0,1", "1"}, {"0,1,0,0", "2"}, {"1,0,0,0", "3"}}));

    const auto zero = run({"node-polys", "--max-delta", "0"}).json();
    CHECK(zero["payload"]["polynomials"].size() == 1);
    CHECK(zero["payload"]["polynomials"][0]["terms"] == Json({{"0,0,0,0", "1"}}));

    const auto capped = run({"node-polys", "--max-delta", "6"});
    CHECK(capped.code == 2);
    CHECK(capped.out.empty());
    CHECK(capped.err.find("B1/B2") != std::string::npos);
}

TEST_CASE("node-polys serializes every rational losslessly")
{
    const auto doc = run({"node-polys"}).json();
    const auto &table = univ::nodal::default_table();
    for (const auto &p : doc["payload"]["polynomials"]) {
        const auto &expected = table[p["delta"].get<std::size_t>()];
        std::size_t n = 0;
        for (const auto &[key, value] : p["terms"].items()) {
            univ::ChernExpr::Exponent e{};
            std::istringstream ks(key);
            char comma;
            ks >> e[0] >> comma >> e[1] >> comma >> e[2] >> comma >> e[3];
            CHECK(Rational::parse(value.get<std::string>()) == expected.coefficient(e));
            ++n;
        }
        CHECK(n == expected.terms().size());
    }
}

TEST_CASE("node-polys csv")
{
    const auto r = run({"node-polys", "--max-delta", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "delta,L2,LK,K2,c2,coefficient\n0,0,0,0,0,1\n1,0,0,0,1,1\n1,0,1,0,0,2\n1,1,0,0,0,3\n");
}

TEST_CASE("count")
{
    const auto cubic = run({"count", "--surface", "P2:3", "--delta", "1"});
    REQUIRE(cubic.code == 0);
    const auto p = cubic.json()["payload"];
    CHECK(p["count"] == "12");
    CHECK(p["validity"] == "outside guaranteed range");
    CHECK(p["chi_L"] == 10);
    CHECK(p["dim_linear_system"] == 9);

    const auto k3 = run({"count", "--surface", "K3:0", "--delta", "1"}).json()["payload"];
    CHECK(k3["count"] == "24");
    CHECK(k3["validity"] == "in range");

    const auto parity = run({"count", "--surface", "1,0,0,24", "--delta", "1"});
    CHECK(parity.code == 2);
    CHECK(parity.err.find("odd") != std::string::npos);

    // Satisfies both integrality conditions, so it is accepted.
    CHECK(run({"count", "--surface", "1,1,0,24", "--delta", "1"}).code == 0);

    CHECK(run({"count", "--surface", "Q9:1", "--delta", "1"}).code == 2);
    CHECK(run({"count", "--surface", "P2:3", "--delta", "6"}).code == 2);
    CHECK(run({"count", "--surface", "P2:3"}).code == 2);
}

TEST_CASE("yau-zaslow")
{
    const auto r = run({"yau-zaslow", "--max-delta", "5"});
    CHECK(r.code == 0);
    const auto rows = r.json()["payload"]["rows"];
    REQUIRE(rows.size() == 6);
    CHECK(rows[5]["node_polynomial"] == "176256");
    CHECK(rows[5]["partition_coefficient"] == "176256");
    CHECK(rows[5]["L2"] == 8);
    CHECK(r.json()["payload"]["all_equal"] == true);
}

TEST_CASE("blowup-check, rr-solve and factorize")
{
    const auto blow = run({"blowup-check", "--surface", "P2:3"});
    CHECK(blow.code == 0);
    CHECK(blow.json()["payload"]["holds"] == true);
    CHECK(blow.json()["payload"]["blown_up"]["L2"] == 8);

    const auto rr = run({"rr-solve"});
    CHECK(rr.code == 0);
    CHECK(rr.json()["payload"]["coefficients"] == Json({{"A1", "1/12"}, {"A2", "1/12"}, {"A3", "1/2"}, {"A4", "1/2"}}));

    const auto fac = run({"factorize"});
    CHECK(fac.code == 0);
    const auto p = fac.json()["payload"];
    CHECK(p["reassembly_matches"] == true);
    CHECK(p["log_A3"][1] == "3");
    CHECK(p["log_A1"][1] == "0");
}

TEST_CASE("inclexcl")
{
    const auto r = run({"inclexcl"}, "[[1,2],[2,3]]");
    REQUIRE(r.code == 0);
    const auto p = r.json()["payload"];
    CHECK(p["union_size"] == 3);
    CHECK(p["union_via_modified"] == 3);
    CHECK(p["union_via_alternating"] == 3);
    REQUIRE(p["table"].size() == 3);
    CHECK(p["table"][2]["index_set"] == Json({1, 2}));
    CHECK(p["table"][2]["intersection"] == Json({2}));
    CHECK(p["table"][2]["modified"] == 1);

    const auto csv = run({"inclexcl", "--format", "csv"}, "[[1,2],[2,3]]");
    CHECK(csv.out == "index_set,plain,modified\n1,2,1\n2,2,1\n1 2,1,1\n");

    CHECK(run({"inclexcl"}, "[[1,2],").code == 2);
    CHECK(run({"inclexcl"}, "{\"a\":1}").code == 2);
    CHECK(run({"inclexcl"}, "[[1,2.5]]").code == 2);
    CHECK(run({"inclexcl", "--max-sets", "1"}, "[[1],[2]]").code == 2);
}

TEST_CASE("series")
{
    const auto dg2 = run({"series", "--name", "DG2", "--order", "5"});
    REQUIRE(dg2.code == 0);
    CHECK(dg2.json()["payload"]["coefficients"] == Json({"0", "1", "6", "12", "28", "30"}));

    CHECK(run({"series", "--name", "G2", "--order", "0"}).json()["payload"]["coefficients"] == Json({"-1/24"}));
    CHECK(run({"series", "--name", "PARTITION", "--power", "24"}).json()["payload"]["coefficients"][5] == "176256");
    CHECK(run({"series", "--name", "B1", "--order", "6"}).code == 2);
    CHECK(run({"series", "--name", "ETA"}).code == 2);
    CHECK(run({"series", "--name", "DELTA", "--format", "csv"}).out.starts_with("k,coefficient\n0,0\n1,1\n2,-24\n"));
}

TEST_CASE("usage errors and determinism")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"node-polys", "--max-delta", "x"}).code == 2);
    CHECK(run({"node-polys", "--format", "xml"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"blowup-check", "--surface", "P2:3", "--format", "csv"}).code == 2);

    for (const auto &args : std::vector<std::vector<std::string>>{
             {"node-polys"}, {"count", "--surface", "P2:5", "--delta", "3"}, {"factorize"}, {"yau-zaslow"}}) {
        CHECK(run(args).out == run(args).out);
    }
}
