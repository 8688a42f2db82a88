#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fcat/cli.hpp"

using namespace fcat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "fcat_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("number formatting")
{
    CHECK(format_number(2.75) == "2.75");
    CHECK(format_number(50.0) == "50");
    CHECK(format_number(0.92483096357) == "0.9248309636");
    CHECK(format_number(1.0 / 3.0) == "0.3333333333");
    CHECK(format_number(-0.0001234) == "-0.0001234");
}

TEST_CASE("table command")
{
    const auto path = scratch("table.csv");
    const Run r = run({"table", "--C", "2.75,50", "--out", path.string()});
    REQUIRE(r.code == 0);
    const auto rows = lines(slurp(path));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "C,u1,u2,I1,I2");
    CHECK(rows[1].rfind("2.75,0.92483096", 0) == 0);
    CHECK(rows[2].rfind("50,0.14287212", 0) == 0);
    double c, u1, u2, i1, i2;
    REQUIRE(std::sscanf(rows[1].c_str(), "%lf,%lf,%lf,%lf,%lf", &c, &u1, &u2, &i1, &i2) == 5);
    CHECK(std::abs(u2 - 1.077103331) <= 1e-8);
    CHECK(std::abs(i1 / 2.363204279 - 1) <= 1e-5);
    CHECK(std::abs(i2 / 4.598285949 - 1) <= 1e-5);

    const std::string first = slurp(path);
    REQUIRE(run({"table", "--C", "2.75,50", "--out", path.string()}).code == 0);
    CHECK(slurp(path) == first);

    const Run bad = run({"table", "--C", "1.0", "--out", scratch("never.csv").string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("C = 1") != std::string::npos);
    CHECK(run({"table", "--C", "3", "--out", "/nonexistent-dir/t.csv"}).code == 3);
    CHECK(run({"table", "--C", "3"}).code == 2);

    const auto all = scratch("all.csv");
    REQUIRE(run({"table", "--out", all.string()}).code == 0);
    CHECK(lines(slurp(all)).size() == 26);
}

TEST_CASE("domain command")
{
    CHECK(run({"domain", "--C", "0.5"}).out.find("WholeLine, D=R, u0=0") != std::string::npos);
    const Run three = run({"domain", "--C", "3.1"});
    CHECK(three.code == 0);
    CHECK(three.out.find("(-inf, -1.266389104) (-0.7556136794, 0.7556136794) (1.266389104, inf)") !=
          std::string::npos);
    const Run e = run({"domain", "--C", "2.718281828459045"});
    CHECK(e.out.find("PuncturedAtOne") != std::string::npos);
    CHECK(e.out.find("warning") != std::string::npos);
    CHECK(run({"domain", "--C", "0"}).code == 2);
}

TEST_CASE("profile command")
{
    const auto path = scratch("profile.csv");
    REQUIRE(run({"profile", "--kind", "spacelike", "--C", "0", "--u-range", "-3,3", "--n", "601",
                 "--out", path.string()})
                .code == 0);
    auto rows = lines(slurp(path));
    REQUIRE(rows.size() == 602);
    CHECK(rows[0] == "u,g,gprime");
    double prev = -1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double u, g, gp;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &u, &g, &gp) == 3);
        CHECK(g > prev);
        CHECK(std::abs(gp) <= 1.0);
        prev = g;
    }

    REQUIRE(run({"profile", "--kind", "timelike", "--C", "3.1", "--u-range=-0.74,0.74", "--n", "51",
                 "--out", path.string()})
                .code == 0);
    rows = lines(slurp(path));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double u, g, gp;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf,%lf", &u, &g, &gp) == 3);
        CHECK(gp >= 1.0);
    }

    CHECK(run({"profile", "--kind", "timelike", "--C", "3.1", "--u-range", "0,1", "--out",
               path.string()})
              .code == 2);
    CHECK(run({"profile", "--kind", "lightlike", "--C", "1", "--out", path.string()}).code == 2);
    CHECK(run({"profile", "--kind", "timelike", "--C", "3.1", "--component", "outer", "--out",
               path.string()})
              .code == 0);
}

TEST_CASE("mesh command")
{
    const auto path = scratch("mesh.obj");
    REQUIRE(run({"mesh", "--kind", "spacelike", "--C", "0", "--u-range", "0.05,2", "--nu", "64",
                 "--nv", "64", "--out", path.string()})
                .code == 0);
    const std::string text = slurp(path);
    int v = 0, f = 0, bad = 0;
    for (const std::string& l : lines(text)) {
        if (l.rfind("v ", 0) == 0) {
            ++v;
            if (l.find("nan") != std::string::npos)
                ++bad;
        } else if (l.rfind("f ", 0) == 0) {
            ++f;
            int a, b, c;
            REQUIRE(std::sscanf(l.c_str(), "f %d %d %d", &a, &b, &c) == 3);
            for (int i : {a, b, c})
                if (i < 1 || i > 4096)
                    ++bad;
        } else {
            ++bad;
        }
    }
    CHECK(v == 4096);
    CHECK(f == 2 * 63 * 64);
    CHECK(bad == 0);

    REQUIRE(run({"mesh", "--kind", "spacelike", "--C", "0", "--u-range", "0.05,2", "--out",
                 path.string()})
                .code == 0);
    CHECK(slurp(path) == text);

    CHECK(run({"mesh", "--kind", "timelike", "--C", "2.5", "--u-range", "0.05,2", "--out",
               path.string()})
              .code == 0);
    CHECK(run({"mesh", "--kind", "spacelike", "--C", "0", "--nu", "1", "--out", path.string()})
              .code == 2);
    const Run deg = run({"mesh", "--kind", "spacelike", "--C", "0", "--u-range", "-1,1", "--nu", "3",
                         "--out", path.string()});
    CHECK(deg.code == 2);
    CHECK(deg.err.find("(u, v) = (0, 0)") != std::string::npos);
}

TEST_CASE("verify command and exit codes")
{
    const Run c = run({"verify", "--suite", "corollary"});
    CHECK(c.code == 0);
    CHECK(c.out.find("verdict: ConsistentWithTheorem") != std::string::npos);
    CHECK(run({"verify", "--suite", "lemma1", "--seed", "3"}).code == 0);
    const Run strict = run({"verify", "--suite", "classification", "--trials", "10",
                            "--spread-tol", "1e9"});
    CHECK(strict.code == 1);
    CHECK(strict.out.find("[FAIL] min spread") != std::string::npos);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"table", "--bogus", "1", "--out", "x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("config file entries yield to explicit flags")
{
    const auto cfg = scratch("table.cfg");
    const auto out = scratch("from_config.csv");
    {
        std::ofstream f(cfg);
        f << "# table settings\nC = 2.75\nout = " << out.string() << "\n";
    }
    REQUIRE(run({"table", "--config", cfg.string()}).code == 0);
    CHECK(lines(slurp(out))[1].rfind("2.75,", 0) == 0);
    REQUIRE(run({"table", "--config", cfg.string(), "--C", "50"}).code == 0);
    CHECK(lines(slurp(out))[1].rfind("50,", 0) == 0);
    CHECK(run({"table", "--config", scratch("missing.cfg").string()}).code == 3);
}
