#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SEMICHAOS_CLI_PATH
#define SEMICHAOS_CLI_PATH "semichaos"
#endif

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(SEMICHAOS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string tmp_path(const std::string& name) {
    return std::string("/tmp/semichaos_test_") + name;
}

}  // namespace

TEST_CASE("specfun command evaluates closed forms") {
    auto r = run_cli("specfun --fn K --nu 0.5 --x 2");
    REQUIRE(r.exit_code == 0);
    double got = std::stod(r.out);
    double want = std::sqrt(M_PI / 4.0) * std::exp(-2.0);
    CHECK(std::abs(got - want) < 1e-12 * want);

    auto r2 = run_cli("specfun --fn tildeK --nu 1 --x 0");
    REQUIRE(r2.exit_code == 0);
    CHECK(std::abs(std::stod(r2.out) - 1.0) < 1e-13);

    auto grid = run_cli("specfun --fn J --nu 1 --x-min 0 --x-max 5 --x-count 6");
    REQUIRE(grid.exit_code == 0);
    std::stringstream ss(grid.out);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "x,value,abs_error_est");
    int rows = 0;
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6);
}

TEST_CASE("specfun argument errors exit with code 2") {
    CHECK(run_cli("specfun --fn K --nu abc --x 2").exit_code == 2);
    CHECK(run_cli("specfun --nu 1 --x 2").exit_code == 2);
    CHECK(run_cli("specfun --fn QQ --nu 1 --x 2").exit_code == 2);
    // domain violation is a parameter error
    CHECK(run_cli("specfun --fn K --nu -0.75 --x 2").exit_code == 2);
    // envelope breach reports exit 3
    CHECK(run_cli("specfun --fn I --nu 0 --x 900").exit_code == 3);
}

TEST_CASE("evolve emits a monotone norm column for the gaussian default") {
    std::string out = tmp_path("evolve.csv");
    auto r = run_cli("evolve --n 2 --kappa 0,0 --p 4 --rho 1 --c 0 --f gaussian --t-min 0.5 "
                     "--t-max 4 --t-count 6 --out " + out);
    REQUIRE(r.exit_code == 0);
    std::ifstream is(out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,norm,log_norm");
    double prev = 1e300;
    int rows = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string t, n, ln;
        std::getline(ls, t, ',');
        std::getline(ls, n, ',');
        std::getline(ls, ln, ',');
        double nv = std::stod(n);
        CHECK(nv < prev);
        prev = nv;
        ++rows;
    }
    CHECK(rows == 6);
}

TEST_CASE("evolve eigen decays like exp(-rho^2 t) for lambda = 0") {
    auto r = run_cli("evolve --n 2 --kappa 0,0 --p 4 --rho 1 --c 0 --f eigen --lambda-re 0 "
                     "--lambda-im 0 --t-min 1 --t-max 4 --t-count 4");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string line;
    std::getline(ss, line);  // header
    std::vector<double> ts, ns;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::stringstream ls(line);
        std::string a, b;
        std::getline(ls, a, ',');
        std::getline(ls, b, ',');
        ts.push_back(std::stod(a));
        ns.push_back(std::stod(b));
    }
    REQUIRE(ts.size() == 4);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        double want = std::exp(-(ts[i] - ts[0]));
        CHECK(std::abs(ns[i] / ns[0] - want) < 1e-3 * want);
    }
}

TEST_CASE("grid-function round trip through the CLI") {
    std::string g1 = tmp_path("grid1.csv"), series = tmp_path("series.csv"),
                g2 = tmp_path("grid2.csv");
    auto r1 = run_cli("evolve --n 2 --kappa 0.5,1.0 --p 4 --rho 1 --c 0 --f gaussian --t-min 0.4 "
                      "--t-max 0.8 --t-count 4 --radial-nodes 64 --angular-res 16 "
                      "--dump-grid " + g1 + " --out " + series);
    REQUIRE(r1.exit_code == 0);
    auto r2 = run_cli("evolve --n 2 --kappa 0.5,1.0 --p 4 --rho 1 --c 0 --f fromfile --input " +
                      g1 + " --t-min 0.3 --t-max 0.6 --t-count 2 --radial-nodes 64 "
                      "--angular-res 16 --dump-grid " + g2 + " --out /dev/null");
    REQUIRE(r2.exit_code == 0);
    std::ifstream is(g2);
    std::string header;
    std::getline(is, header);
    CHECK(header == "r,theta,re,im");
}

TEST_CASE("spectrum reports boundary rows and the axis intersection") {
    auto r = run_cli("spectrum --p 4 --rho 1 --c 1 --v-max 1 --v-count 5 --out " +
                     tmp_path("spec.csv"));
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == "infinite");
    CHECK(std::abs(j["v_max"].get<double>() - 0.5) < 1e-13);
    std::ifstream is(tmp_path("spec.csv"));
    std::string header, row;
    std::getline(is, header);
    CHECK(header == "v,u_boundary");
    // vertex row at v = 0 has u = c_p = 0.75
    for (int k = 0; k < 3; ++k) std::getline(is, row);
    CHECK(row.substr(0, 2) == "0,");
    CHECK(std::abs(std::stod(row.substr(2)) - 0.75) < 1e-14);

    auto rd = run_cli("spectrum --p 2 --rho 1");
    REQUIRE(rd.exit_code == 0);
    auto jd = nlohmann::json::parse(rd.out);
    CHECK(jd["degenerate"] == true);
}

TEST_CASE("verdict and witness commands emit the documented JSON") {
    auto r = run_cli("verdict --p 4 --rho 1 --c 1 --kappa 0,0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "Chaotic");
    CHECK(j["theorem_tag"] == "Thm1.4(1)");

    auto r2 = run_cli("verdict --p 4 --rho 1 --c 0.6 --kappa 0.5,1.0");
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["verdict"] == "Unknown");
    CHECK(j2["theorem_tag"] == "Remark1.7");

    auto rw = run_cli("witness periodic --p 4 --rho 1 --c 1");
    REQUIRE(rw.exit_code == 0);
    auto jw = nlohmann::json::parse(rw.out);
    CHECK(jw["role"] == "A3");
    CHECK(jw["residuals"]["return_residual"].get<double>() <= 1e-6);
    CHECK(jw.contains("period"));

    // parameter error: witness at c <= c_p
    CHECK(run_cli("witness periodic --p 4 --rho 1 --c 0.75").exit_code == 2);
    CHECK(run_cli("witness nope --p 4 --rho 1 --c 1").exit_code == 2);
}

TEST_CASE("config file values are overridden by flags") {
    std::string cfg = tmp_path("cfg.ini");
    {
        std::ofstream os(cfg);
        os << "[verdict]\np=4\nrho=1\nc=0.5\nkappa=0,0\n";
    }
    auto r = run_cli("verdict --config " + cfg + " --c 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["c"] == 1.0);
    CHECK(j["verdict"] == "Chaotic");

    auto r2 = run_cli("verdict --config " + cfg);
    REQUIRE(r2.exit_code == 0);
    auto j2 = nlohmann::json::parse(r2.out);
    CHECK(j2["verdict"] == "NotHypercyclic");
}
