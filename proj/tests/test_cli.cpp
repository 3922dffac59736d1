#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the CLI with stderr merged into stdout.
Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + TORSION_ATLAS_BIN + std::string(" ") + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) {
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("classify") {
    auto r = run("classify --degree 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("allowed cyclic orders: 1 2 3 4 5 6 7 8 9 10 12\n") != std::string::npos);
    CHECK(r.out.find("C21: lemma-5.1") != std::string::npos);

    auto j = json_of(run("--json classify --degree 2"));
    std::vector<unsigned> orders = j.at("allowed_cyclic_orders");
    CHECK(std::find(orders.begin(), orders.end(), 13u) != orders.end());
    CHECK(orders == std::vector<unsigned>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 15, 16});

    auto j3 = json_of(run("classify --degree 3 --json"));
    bool found = false;
    for (const auto& rep : j3.at("cyclic_reports"))
        if (rep.at("shape") == "C15") {
            found = true;
            CHECK(rep.at("verdict") == "EXCLUDED");
        }
    CHECK(found);

    r = run("classify --degree 4");
    CHECK(r.code == 2);
    CHECK(r.out.find("degree must be prime") != std::string::npos);
    CHECK(run("classify").code == 2);
}

TEST_CASE("feasible") {
    auto r = run("feasible --j 1728 --n 5 --degree 2");
    CHECK(r.code == 1);
    CHECK(r.out.find("CM j-invariant") != std::string::npos);

    auto j = json_of(run("--json feasible --j -25/2 --n 15 --degree 2"));
    CHECK(j.at("mode") == "full");
    CHECK(j.at("factor_degrees").size() == 6);
    CHECK(j.at("min_x_degree") == 4);

    j = json_of(run("--json feasible --j 3375/2 --n 21 --degree 7 --mode screen"));
    CHECK(j.at("status") == "INFEASIBLE");
    CHECK(j.at("screen").at("certified_min") == 3);

    // deg f_21 = 192 > 100 selects the screen.
    j = json_of(run("--json feasible --j 3375/2 --n 21 --degree 7"));
    CHECK(j.at("mode") == "screen");

    j = json_of(run("--json feasible --j -122023936/161051 --n 5 --degree 1"));
    CHECK(j.at("status") == "FEASIBLE_CERTIFIED");
    CHECK(j.at("certificate").at("y_in_field") == true);

    CHECK(run("feasible --j 1/0 --n 5 --degree 2").code == 1);
    CHECK(run("feasible --j 1/x --n 5 --degree 2").code == 2);
    CHECK(run("feasible --j 3 --n 5 --degree 2 --mode fast").code == 2);
    CHECK(run("feasible --j 3 --n 1 --degree 2").code == 2);
}

TEST_CASE("divpoly, factor, screen, torsion, twist") {
    auto r = run("divpoly --curve a4=1,a6=0 --n 3");
    CHECK(r.out == "3x^4+6x^2-1\n[\"-1\",\"0\",\"6\",\"0\",\"3\"]\n");
    auto j = json_of(run("--json divpoly --curve a4=1,a6=0 --n 4 --primitive"));
    CHECK(j.at("degree") == 6);
    CHECK(j.at("poly").at("coeffs").size() == 7);

    CHECK(run("torsion --curve a4=0,a6=1").out == "C6\n");
    CHECK(run("torsion --curve a4=-1,a6=0").out == "C2xC2\n");
    // Long form y^2 + y = x^3 - x^2 - 10x - 20.
    CHECK(run("torsion --curve a1=0,a2=-1,a3=1,a4=-10,a6=-20").out == "C5\n");
    r = run("torsion --curve a4=0,a6=0");
    CHECK(r.code == 1);
    CHECK(r.out.find("singular") != std::string::npos);
    CHECK(run("torsion --curve a5=1").code == 2);

    r = run("factor --poly \"x^2-1\"");
    CHECK(r.out.find("degrees: [1, 1]") != std::string::npos);
    j = json_of(run("--json factor --poly \"2*x^4 + 8\""));
    CHECK(j.at("content") == "2");
    CHECK(j.at("degrees") == nlohmann::json::array({2, 2}));
    CHECK(run("factor --poly \"x^^2\"").code == 2);

    j = json_of(run("--json screen --poly \"x^4 + 1\" --primes 3"));
    CHECK(j.at("certified_min") == 2);
    CHECK(run("screen --poly \"x^2 + 2*x + 1\"").code == 1);

    j = json_of(run("--json twist --curve a4=-1,a6=0 --factor \"x - 2\""));
    CHECK(j.at("twist_c") == "6");
    CHECK(j.at("y_in_field") == true);
    CHECK(run("twist --curve a4=-1,a6=0 --factor \"x^2 - 2\"").code == 1);
}

TEST_CASE("output is byte-deterministic and threads do not change it") {
    const std::string args = "--json feasible --j 3375/2 --n 21 --degree 7 --mode screen";
    const auto a = run(args), b = run(args), c = run(args, "TORSION_ATLAS_THREADS=3");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run("--threads 4 " + args).out == a.out);
    CHECK(run("--threads 0 " + args).code == 2);
    CHECK(run("--seed 12345 --json factor --poly \"x^6 - 1\"").out == run("--json factor --poly \"x^6 - 1\"").out);
}
