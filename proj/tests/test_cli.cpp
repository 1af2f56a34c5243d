#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace
{

const std::string cli = HYPERTODA_CLI;
const std::string data = HYPERTODA_DATA;

std::filesystem::path tmpdir()
{
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("hypertoda_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args)
{
    const auto out = tmpdir() / "stdout.txt";
    const std::string cmd = cli + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string write_tmp(const std::string &name, const std::string &text)
{
    const auto p = tmpdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("malformed curve files exit with 2")
{
    CHECK(run("periods --curve " + write_tmp("bad.json", "{\"genus\": 1, \"lambda\": [[0,0]]}")).code == 2);
    CHECK(run("periods --curve " + write_tmp("notjson.json", "genus = 1")).code == 2);
    CHECK(run("periods --curve /nonexistent/curve.json").code == 2);
    CHECK(run("periods --curve " + data + "/elliptic_x3_minus_x.json --format xml").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("periods reports the Legendre residual")
{
    const auto r = run("periods --curve " + data + "/elliptic_x3_minus_x.json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("legendre_residual"));
    CHECK(j["legendre_residual"].get<double>() < 1e-12);
}

TEST_CASE("torsion finds the order-3 abscissa")
{
    const auto r = run("torsion --N 3 --curve " + data + "/elliptic_x3_minus_x.json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto &c : j["candidates"]) {
        const auto &x = c["point"]["x"];
        const double re = x.is_array() ? x[0].get<double>() : x.get<double>();
        const double im = x.is_array() ? x[1].get<double>() : 0.0;
        found = found || (std::abs(re - std::sqrt(1.0 + 2.0 / std::sqrt(3.0))) < 1e-8 && std::abs(im) < 1e-8);
    }
    CHECK(found);
}

TEST_CASE("csv output and --out")
{
    const auto path = (tmpdir() / "division.csv").string();
    const auto r = run("division --n 3 --format csv --out " + path + " --curve " + data + "/elliptic_x3_minus_x.json");
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first.find(',') != std::string::npos);
}

TEST_CASE("genus two curve file loads")
{
    CHECK(run("sigma --u 0.1 0.05 0.2 -0.1 --curve " + data + "/genus2_x5_plus_1.json").code == 0);
}

TEST_CASE("verify-all reports the failing criterion through its exit code")
{
    CHECK(run("verify-all").code == 1);
    CHECK(run("verify-addition --samples 5").code == 0);
}
