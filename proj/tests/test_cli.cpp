#include "doctest.h"

#include "potframe/cli.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace potframe;

namespace {
const std::string image_eq = "u_t = u_xxx - (3/x^2)*u_x + (3/x^3)*u";
const std::string kdv = "w_t = w_xxx";
const std::string heat = "u_t = u_xx";

CliResult run(std::vector<std::string> args)
{
    return run_cli(args);
}

bool contains(const std::string& s, const std::string& part)
{
    return s.find(part) != std::string::npos;
}
} // namespace

TEST_CASE("cli: documented examples")
{
    const CliResult induced = run({"induced", "--eq", image_eq, "--alpha", "1/x", "--gamma", "Dx^4"});
    CHECK(induced.exit == 0);
    CHECK(contains(induced.out, "verdict induced: true"));

    const CliResult cosym = run({"cosym-check", "--eq", heat, "--alpha", "x^2"});
    CHECK(cosym.exit == 1);
    CHECK(contains(cosym.out, "adjoint_residual: 2"));

    const CliResult adj = run({"adjoint", "--eq", heat});
    CHECK(adj.exit == 0);
    CHECK(contains(adj.out, "a_t = -a_xx"));
}

TEST_CASE("cli: exit codes")
{
    // 0: verdicts hold.
    CHECK(run({"cosym-check", "--eq", heat, "--alpha", "x"}).exit == 0);
    // 1: a verdict is false.
    CHECK(run({"induced", "--eq", image_eq, "--alpha", "1/x", "--gamma", "3*t*Dx^2 + x"}).exit == 1);
    CHECK(run({"quad-char-check", "--eq", heat, "--gamma", "1"}).exit == 1);
    // 2: parse errors, domain errors and bad usage.
    const CliResult bad = run({"adjoint", "--eq", "u_t = u_xx +"});
    CHECK(bad.exit == 2);
    CHECK(contains(bad.err, "position 12"));
    CHECK(bad.out.empty());
    CHECK(run({"adjoint", "--eq", "u_t = u*u_x"}).exit == 2);
    CHECK(run({"adjoint", "--eq", "u_t = 0*u_xx"}).exit == 2);
    CHECK(run({"conslaw", "--eq", heat, "--alpha", "x^2"}).exit == 2);
    CHECK(run({"darboux", "--eq", kdv, "--phi", "x^3"}).exit == 2);
    CHECK(run({"quad-conslaw", "--eq", heat, "--gamma", "1"}).exit == 2);
    CHECK(run({"gamma-ml", "--m", "one", "--l", "0"}).exit == 2);
    CHECK(run({"adjoint"}).exit == 2);
    CHECK(run({"no-such-command"}).exit == 2);
    CHECK(run({}).exit == 2);
    CHECK(run({"simulate", "--eq", kdv, "--final-time", "0.01"}).exit == 2);
    CHECK(run({"simulate", "--eq", image_eq, "--final-time", "0.01"}).exit == 2);
    // Help is not an error.
    const CliResult help = run({"--help"});
    CHECK(help.exit == 0);
    CHECK(contains(help.out, "kdv-demo"));
}

TEST_CASE("cli: order limit")
{
    setenv("POTFRAME_MAX_ORDER", "4", 1);
    CHECK(run({"gamma-ml", "--m", "1", "--l", "2"}).exit == 2);
    CHECK(run({"quad-char-check", "--eq", kdv, "--gamma", "Dx^6"}).exit == 2);
    CHECK(run({"quad-char-check", "--eq", kdv, "--gamma", "Dx^4"}).exit == 0);
    setenv("POTFRAME_MAX_ORDER", "zero", 1);
    CHECK(run({"adjoint", "--eq", heat}).exit == 2);
    unsetenv("POTFRAME_MAX_ORDER");
    // Default cap is 12.
    CHECK(run({"gamma-ml", "--m", "3", "--l", "3"}).exit == 0);
    CHECK(run({"gamma-ml", "--m", "4", "--l", "3"}).exit == 2);
}

TEST_CASE("cli: every command runs")
{
    const std::vector<std::vector<std::string>> ok = {
        {"conslaw", "--eq", image_eq, "--alpha", "1/x"},
        {"potsys", "--eq", image_eq, "--alpha", "1/x"},
        {"potential-eq", "--eq", image_eq, "--alpha", "1/x"},
        {"mod-poteq", "--eq", image_eq, "--alpha", "1/x"},
        {"darboux", "--eq", kdv, "--phi", "x"},
        {"dual-check", "--eq", heat, "--w0", "x"},
        {"splitting-check", "--eq", kdv, "--phi", "x"},
        {"splitting-check", "--eq", kdv, "--phi", "x", "--eq-a", image_eq},
        {"char-map", "--eq", heat, "--w0", "x", "--alpha-tilde", "1/x"},
        {"reduced-char", "--eq", image_eq, "--alpha", "1/x", "--beta", "1"},
        {"reduced-char", "--eq", image_eq, "--alpha", "1/x", "--gamma", "Dx^2"},
        {"quad-char-check", "--eq", kdv, "--gamma", "Dx * (3*t*Dx^2 + x) * Dx"},
        {"quad-conslaw", "--eq", kdv, "--gamma", "Dx^2"},
        {"gamma-ml", "--m", "1", "--l", "1"},
        {"kdv-demo", "--grid-max", "2"},
        {"density-check", "--eq", heat, "--alpha", "1", "--alpha-tilde", "x"},
        {"simulate", "--eq", heat, "--points", "32", "--dt", "1e-3", "--final-time", "0.05", "--init", "cos:2"},
    };
    for (const auto& args : ok) {
        const CliResult r = run(args);
        INFO(args.front());
        INFO(r.err);
        CHECK(r.exit == 0);
        CHECK(contains(r.out, "command: " + args.front()));
    }
    CHECK(contains(run(ok[1]).out, "vt: v_t = 1/x*u_xx + 1/x^2*u_x - 1/x^3*u"));
    CHECK(contains(run(ok[4]).out, "image: u_t = u_xxx - 3/x^2*u_x + 3/x^3*u"));
    CHECK(contains(run(ok[3]).out, "modified_potential_equation: w_t = w_xxx"));
    // Splitting against an unrelated equation fails.
    CHECK(run({"splitting-check", "--eq", kdv, "--phi", "x", "--eq-a", "u_t = u_xxx"}).exit == 1);
    // Exactly one of --beta, --gamma.
    CHECK(run({"reduced-char", "--eq", image_eq, "--alpha", "1/x"}).exit == 2);
}

TEST_CASE("cli: structured output")
{
    const CliResult r = run({"potsys", "--eq", image_eq, "--alpha", "1/x", "--json"});
    REQUIRE(r.exit == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "potsys");
    CHECK(j.at("inputs").at("eq") == "u_t = u_xxx - 3/x^2*u_x + 3/x^3*u");
    CHECK(j.at("inputs").at("alpha") == "1/x");
    CHECK(j.at("result").at("vx") == "v_x = 1/x*u");
    CHECK(j.at("verdicts").at("compatible") == true);

    const auto demo = nlohmann::json::parse(run({"kdv-demo", "--json"}).out);
    CHECK(demo.at("result").at("discrepancies") == nlohmann::json::array({nlohmann::json::array({1, 0})}));
    CHECK(demo.at("verdicts").at("all_verified") == true);
    CHECK(demo.at("result").at("grid").size() == 25);
}

TEST_CASE("cli: repeat runs are byte-identical")
{
    const std::vector<std::vector<std::string>> cases = {
        {"kdv-demo"},
        {"kdv-demo", "--json"},
        {"mod-poteq", "--eq", image_eq, "--alpha", "1/x", "--json"},
        {"simulate", "--eq", kdv, "--points", "32", "--dt", "1e-3", "--final-time", "0.1", "--json"},
        {"cosym-check", "--eq", heat, "--alpha", "x^2"},
        {"adjoint", "--eq", "u_t = u_xx +"},
    };
    for (const auto& args : cases) {
        const CliResult a = run(args);
        const CliResult b = run(args);
        CHECK(a.exit == b.exit);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}

TEST_CASE("cli: files")
{
    const std::string out = "cli_test_out.txt";
    const std::string csv = "cli_test_series.csv";
    const CliResult r = run({"simulate", "--eq", kdv, "--points", "32", "--dt", "1e-3", "--final-time", "0.01",
                             "--density", "w_x^2", "--csv", csv, "--out", out});
    CHECK(r.exit == 0);
    CHECK(r.out.empty());
    std::ifstream f(out);
    std::stringstream text;
    text << f.rdbuf();
    CHECK(contains(text.str(), "density: w_x^2"));

    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    CHECK(header == "t,w_x^2");
    int rows = 0;
    for (std::string line; std::getline(c, line);)
        ++rows;
    CHECK(rows == 11);
    std::remove(out.c_str());
    std::remove(csv.c_str());
}
