#include "doctest.h"

#include "qcount/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

using namespace qcount::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "qcount");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir()
{
    auto dir = std::filesystem::temp_directory_path() / "qcount_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("grid parsing")
    {
        CHECK(parse_grid("0,0.05,0.3,1") == std::vector<double>{0.0, 0.05, 0.3, 1.0});
        CHECK(parse_grid("0:1:0.25") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
        CHECK(parse_grid("0:0.3:0.1") == std::vector<double>{0.0, 0.1, 0.2, 0.3});
        CHECK(parse_grid(" 2 ") == std::vector<double>{2.0});
        CHECK_THROWS_AS(parse_grid(""), ConfigError);
        CHECK_THROWS_AS(parse_grid("1,,2"), ConfigError);
        CHECK_THROWS_AS(parse_grid("a"), ConfigError);
        CHECK_THROWS_AS(parse_grid("0:1"), ConfigError);
        CHECK_THROWS_AS(parse_grid("1:0:0.1"), ConfigError);
        CHECK_THROWS_AS(parse_grid("0:1:0"), ConfigError);
        CHECK_THROWS_AS(parse_grid("inf"), ConfigError);
    }

    TEST_CASE("fig 1 output embeds the config and its tables")
    {
        const Result r = invoke({"fig", "1", "--N", "20", "--g-grid", "0,0.5"});
        REQUIRE(r.code == 0);
        CHECK(r.out.starts_with("# qcount 0.1.0\n# task: fig1\n"));
        CHECK(r.out.find("# config.N: 20\n") != std::string::npos);
        CHECK(r.out.find("# config.g_grid: 0,0.5\n") != std::string::npos);
        CHECK(r.out.find("# meta.mean: ") != std::string::npos);
        CHECK(r.out.find("# table: distribution\nm,p\n0,") != std::string::npos);
        CHECK(r.out.find("# table: g_sweep\ng,mean_over_N,variance_over_N\n0,0.5,0.25") !=
              std::string::npos);
    }

    TEST_CASE("identical runs give identical bytes, independent of worker count")
    {
        const std::vector<std::string> args{"fig", "3", "--N", "40", "--g-grid", "0:2:0.1"};
        const Result a = invoke(args);
        auto more = args;
        more.insert(more.end(), {"--workers", "3"});
        const Result b = invoke(more);
        const Result c = invoke(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }

    TEST_CASE("json mirrors csv")
    {
        const Result csv = invoke({"dist", "--N", "10", "--T", "0.5"});
        const Result json = invoke({"dist", "--N", "10", "--T", "0.5", "--format", "json"});
        REQUIRE(csv.code == 0);
        REQUIRE(json.code == 0);
        const auto doc = nlohmann::json::parse(json.out);
        CHECK(doc["task"] == "dist");
        CHECK(doc["config"]["N"] == "10");
        REQUIRE(doc["tables"].size() == 2);
        CHECK(doc["tables"][1]["name"] == "T=0.5");
        const auto& rows = doc["tables"][1]["rows"];
        CHECK(rows.size() == 11);
        double total = 0.0;
        for (const auto& row : rows)
            total += row[1].get<double>();
        CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    }

    TEST_CASE("exit codes")
    {
        CHECK(invoke({}).code == 1);
        CHECK(invoke({"fig"}).code == 1);
        CHECK(invoke({"fig", "8"}).code == 1);
        CHECK(invoke({"nonsense"}).code == 1);
        CHECK(invoke({"dist", "--N", "7"}).code == 1);
        CHECK(invoke({"dist", "--kappa", "1.5"}).code == 1);
        CHECK(invoke({"dist", "--T", "-1"}).code == 1);
        CHECK(invoke({"dist", "--T", "0,x"}).code == 1);
        CHECK(invoke({"gscan", "--delta-g", "0"}).code == 1);
        CHECK(invoke({"oracle", "--n", "18", "--check", "rational"}).code == 1);
        CHECK(invoke({"oracle", "--check", "bogus"}).code == 1);
        CHECK(invoke({"fig", "2", "--N", "2"}).code == 0);
        CHECK(invoke({"--help"}).code == 0);

        const Result bad = invoke({"dist", "--N", "7"});
        CHECK(bad.out.empty());
        CHECK(bad.err.find("qcount:") != std::string::npos);
    }

    TEST_CASE("oracle task passes at N = 8")
    {
        const Result r = invoke({"oracle", "--n", "8", "--check", "all"});
        CHECK(r.code == 0);
        CHECK(r.out.find(",fail") == std::string::npos);
        for (const char* name : {"pairs", "rational", "variance", "detector",
                                 "lindblad_occupation", "lindblad_stationary",
                                 "factorization_gap_b"})
            CHECK(r.out.find(std::string("\n") + name + ",") != std::string::npos);
    }

    TEST_CASE("config file values, overridden by flags")
    {
        const auto dir = scratch_dir();
        const auto config = dir / "run.toml";
        std::ofstream(config) << "N = 12\ngamma = 0.5\nT = \"0,0.2\"\n";

        const Result from_file = invoke({"dist", "--config", config.string()});
        REQUIRE(from_file.code == 0);
        CHECK(from_file.out.find("# config.N: 12\n") != std::string::npos);
        CHECK(from_file.out.find("# config.gamma: 0.5\n") != std::string::npos);
        CHECK(from_file.out.find("# config.T: 0,0.2\n") != std::string::npos);

        const Result overridden = invoke({"dist", "--config", config.string(), "--N", "16"});
        REQUIRE(overridden.code == 0);
        CHECK(overridden.out.find("# config.N: 16\n") != std::string::npos);
        CHECK(overridden.out.find("# config.gamma: 0.5\n") != std::string::npos);

        CHECK(invoke({"dist", "--config", (dir / "missing.toml").string()}).code == 1);
    }

    TEST_CASE("figure defaults follow the captions")
    {
        const Result f4 = invoke({"fig", "4", "--N", "10", "--g-grid", "0,1"});
        REQUIRE(f4.code == 0);
        CHECK(f4.out.find("# config.bath_T: 0.1\n") != std::string::npos);
        CHECK(f4.out.find("# config.times: 0,1,10\n") != std::string::npos);
        CHECK(f4.out.find("# table: t=10\n") != std::string::npos);

        const Result f7 = invoke({"fig", "7", "--N", "40"});
        REQUIRE(f7.code == 0);
        CHECK(f7.out.find("# config.gamma: 0.01\n") != std::string::npos);
        CHECK(f7.out.find("# table: g=10\n") != std::string::npos);

        const Result f5 = invoke({"fig", "5", "--N", "10", "--times", "0,40"});
        REQUIRE(f5.code == 0);
        CHECK(f5.out.find("# config.bath_T: 100\n") != std::string::npos);
        CHECK(f5.out.find("# table: g=2\n") != std::string::npos);
    }

    TEST_CASE("output file and directory override")
    {
        const auto dir = scratch_dir();
        const auto target = dir / "sub" / "fig6.csv";
        std::filesystem::remove(target);
        REQUIRE(invoke({"fig", "6", "--N", "20", "--out", target.string()}).code == 0);
        const std::string first = slurp(target);
        CHECK(first.starts_with("# qcount"));

        ::setenv("QCOUNT_OUTPUT_DIR", dir.c_str(), 1);
        const Result relative = invoke({"fig", "6", "--N", "20", "--out", "rel/fig6.csv"});
        ::unsetenv("QCOUNT_OUTPUT_DIR");
        REQUIRE(relative.code == 0);
        CHECK(relative.out.empty());
        CHECK(slurp(dir / "rel" / "fig6.csv") == first);
    }
}
