#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "run_cli.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "sombor_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("index") {
    const auto r = cli::run("index A_ Bg");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "g6,n,m,eso,eu,so");
    CHECK(rows[1] == "A_,2,1,2.82842712,1.73205081,1.41421356");
    CHECK(rows[2].rfind("Bg,3,2,13.4164079,", 0) == 0);

    const auto precise = cli::run("index A_ --precision 10");
    CHECK(lines(precise.out)[1] == "A_,2,1,2.828427125,1.732050808,1.414213562");
}

TEST_CASE("index json, files and stdin") {
    const auto j = cli::run("index A_ --format json");
    CHECK(j.exit_code == 0);
    const auto row = nlohmann::json::parse(lines(j.out).at(0));
    CHECK(row["g6"] == "A_");
    CHECK(row["eso"].get<double>() == doctest::Approx(2.82842712));

    const auto path = scratch("graphs.g6");
    std::ofstream(path) << ">>graph6<<Bw\n\nCl\n";
    const auto f = cli::run("index --file '" + path.string() + "'");
    CHECK(f.exit_code == 0);
    CHECK(lines(f.out).size() == 3);

    const auto s = cli::run("index - < '" + path.string() + "'");
    CHECK(s.out == f.out);
}

TEST_CASE("index reports parse errors with line numbers") {
    const auto bad = cli::run("index A 2>&1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.find("line 1") != std::string::npos);

    const auto path = scratch("bad.g6");
    std::ofstream(path) << "A_\nBg\nB\n";
    const auto f = cli::run("index --file '" + path.string() + "' 2>&1");
    CHECK(f.exit_code == 2);
    CHECK(f.out.find("line 3") != std::string::npos);
}

TEST_CASE("product") {
    CHECK(cli::run("product join @ @").out == "A_\n");
    CHECK(cli::run("product corona @ @").out == "A_\n");
    CHECK(cli::run("product corona Bw @").out == "E{O_\n");
    CHECK(cli::run("product join Cl Cl").exit_code == 0);
    CHECK(cli::run("product tensor @ @ 2>/dev/null").exit_code == 2);
    CHECK(cli::run("product join @ A 2>/dev/null").exit_code == 2);
}

TEST_CASE("bounds from parameters") {
    const auto r = cli::run("bounds eso-join --p1 4,4,2,2 --p2 4,4,2,2 --precision 10");
    CHECK(r.exit_code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] ==
          "kind,variant,alpha1,alpha2,regular_exact,printed_proposition,true_value,lower_ok,upper_ok,lower_tight,"
          "upper_tight");
    CHECK(rows[1].rfind("eso-join,proof-conclusion,2443.761036,2443.761036,2443.761036,", 0) == 0);
    CHECK(rows[1].ends_with(",,,,"));

    CHECK(cli::run("bounds eso-join --p1 4,4,2,3 --p2 1,0,0,0 2>/dev/null").exit_code == 2);
    CHECK(cli::run("bounds eso-join --p1 4,4,2 --p2 1,0,0,0 2>/dev/null").exit_code == 2);
}

TEST_CASE("bounds from graphs") {
    const auto r = cli::run("bounds eu-corona Bw @ --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(lines(r.out).at(0));
    CHECK(j["true_value"].get<double>() == doctest::Approx(26.4051111));
    CHECK(j["lower_ok"] == true);
    CHECK(j["upper_ok"] == true);
    CHECK(j["lower_tight"] == true);
    CHECK(j["upper_tight"] == true);

    const auto st = cli::run("bounds eu-join Bg @ --variant statement --format json");
    const auto sj = nlohmann::json::parse(lines(st.out).at(0));
    CHECK(sj["variant"] == "statement");
    CHECK(sj["upper_ok"] == false);
}

TEST_CASE("bounds rejects unknown kinds") {
    const auto r = cli::run("bounds eso-tensor A_ A_ 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("eso-tensor") != std::string::npos);
}

TEST_CASE("verify exit codes and summaries") {
    const auto ok = cli::run("verify --max-order 3 --kinds all");
    CHECK(ok.exit_code == 0);
    const auto summary = nlohmann::json::parse(ok.out);
    CHECK(summary["corrected_failures"] == 0);
    CHECK(summary["streams"].size() == 4);

    const auto st = cli::run("verify --max-order 3 --kinds eu-join --variant statement 2>/dev/null");
    CHECK(st.exit_code == 0);  // statement failures do not fail the run
    const auto sj = nlohmann::json::parse(st.out);
    CHECK(sj["streams"][0]["failures"].get<int>() > 0);
    CHECK(sj["streams"][0]["first_counterexample"]["g1"] == "A?");

    CHECK(cli::run("verify --max-order 9 2>/dev/null").exit_code == 2);
    CHECK(cli::run("verify --kinds eso-tensor 2>/dev/null").exit_code == 2);
    CHECK(cli::run("verify --mode random --samples 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("verify random mode is reproducible") {
    const auto a = scratch("a.csv");
    const auto b = scratch("b.jsonl");
    const auto r1 = cli::run("verify --mode random --samples 100 --seed 7 --records '" + a.string() + "'");
    const auto r2 = cli::run("verify --mode random --samples 100 --seed 7");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    const auto content = slurp(a);
    CHECK(lines(content).size() == 2 + 400);

    cli::run("verify --mode random --samples 10 --seed 7 --records-format json --records '" + b.string() + "'");
    const auto jl = lines(slurp(b));
    REQUIRE(jl.size() == 41);
    CHECK(nlohmann::json::parse(jl[0])["sweep_config"]["rng_seed"] == 7);
    CHECK(nlohmann::json::parse(jl[1]).contains("gap_upper"));
}
