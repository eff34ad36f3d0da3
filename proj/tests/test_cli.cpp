#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maskmat/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::vector<char*> argv;
    static std::string prog = "maskmat";
    argv.push_back(prog.data());
    for (auto& a : args) argv.push_back(a.data());

    std::ostringstream out, err;
    std::streambuf* oldout = std::cout.rdbuf(out.rdbuf());
    std::streambuf* olderr = std::cerr.rdbuf(err.rdbuf());
    int code = maskmat::cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(oldout);
    std::cerr.rdbuf(olderr);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("verify a published matrix from a file") {
    std::string path = write_temp("g33.txt", "3 5 4\n3 6 7\n3 5 4\n");
    CliResult r = run_cli({"verify", "--scheme", "alg4", "--k", "3", "-d", "3",
                           "--gamma", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("safe") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("verify emits machine-readable reports") {
    std::string path = write_temp("g33b.txt", "3 5 4\n3 6 7\n3 5 4\n");
    CliResult r = run_cli({"verify", "--scheme", "alg4", "--k", "3", "-d", "3",
                           "--gamma", path, "--json", "--method", "batch"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "safe");
    CHECK(j["method"] == "batch");
    CHECK(j["witness"].is_null());
    std::remove(path.c_str());
}

TEST_CASE("verify flags unsafe input through the exit code") {
    // delta of the all-ones block is the zero matrix
    std::string path = write_temp("bad.txt", "1 1\n1 1\n");
    CliResult r = run_cli({"verify", "--scheme", "alg4", "--k", "2", "-d", "2",
                           "--gamma", path, "--json"});
    CHECK(r.code == 1);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "unsafe");
    CHECK(j["witness"].is_object());
    std::remove(path.c_str());
}

TEST_CASE("verify rejects malformed matrices") {
    std::string path = write_temp("ragged.txt", "1 2 3\n4 5\n");
    CliResult r = run_cli({"verify", "--scheme", "alg4", "--k", "3", "-d", "3",
                           "--gamma", path});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    std::remove(path.c_str());

    std::string rows = write_temp("rows.txt", "1 2\n3 4\n");  // d=3 needs 3 or 4 rows
    CliResult r2 = run_cli({"verify", "--scheme", "alg4", "--k", "3", "-d", "3",
                            "--gamma", rows});
    CHECK(r2.code == 2);
    std::remove(rows.c_str());
}

TEST_CASE("verify accepts the json matrix format") {
    nlohmann::json j = {{"k", 2}, {"rows", 2}, {"cols", 1},
                        {"data", {{"1"}, {"1"}}}};
    std::string path = write_temp("g.json", j.dump());
    CliResult r = run_cli({"verify", "--scheme", "alg5", "--k", "2", "-d", "1",
                           "--gamma", path, "--format", "json"});
    CHECK(r.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("construct prints the candidate and its verdict") {
    CliResult r = run_cli({"construct", "--scheme", "alg4", "--k", "4",
                           "--xs", "1,3,5", "--ys", "6,4,a"});
    CHECK(r.code == 0);
    CHECK(r.err.find("safe") != std::string::npos);
    // stdout carries exactly the unified matrix: 4 rows for d=3
    int lines = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 4);

    CliResult dup = run_cli({"construct", "--scheme", "alg4", "--k", "4",
                             "--xs", "1,1,5", "--ys", "6,4,a"});
    CHECK(dup.code == 2);

    CliResult r5 = run_cli({"construct", "--scheme", "alg5", "--k", "4",
                            "--xs", "1,2,5,6", "--ys", "4,7,f"});
    CHECK(r5.code == 0);
    CHECK(r5.out.find("b 7 3") != std::string::npos);
}

TEST_CASE("search emits a json report") {
    CliResult r = run_cli({"search", "--scheme", "alg4", "--k", "4", "-d", "2",
                           "--sampler", "uniform", "--samples", "50", "--seed", "42"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["config"]["samples"] == 50);
    CHECK(j["stats"]["tried"] == 50);

    std::string outpath = "cli_test_stream.jsonl";
    CliResult r2 = run_cli({"search", "--scheme", "alg4", "--k", "4", "-d", "2",
                            "--sampler", "uniform", "--samples", "50", "--seed", "42",
                            "--out", outpath});
    CHECK(r2.code == 0);
    std::ifstream stream(outpath);
    CHECK(stream.good());
    size_t lines = 0;
    std::string line;
    while (std::getline(stream, line))
        if (!line.empty()) ++lines;
    nlohmann::json j2 = nlohmann::json::parse(r2.out);
    CHECK(lines == j2["stats"]["safe_count"].get<size_t>());
    std::remove(outpath.c_str());
}

TEST_CASE("analytic subcommands") {
    CliResult good = run_cli({"analytic", "check", "--scheme", "alg4", "--k", "8",
                              "--xs", "1,3,5", "--ys", "6,4,a"});
    CHECK(good.code == 0);
    CHECK(good.out.find("nonzero") != std::string::npos);

    CliResult built = run_cli({"analytic", "construct", "--scheme", "alg5", "--k", "8"});
    CHECK(built.code == 0);

    CliResult low = run_cli({"analytic", "construct", "--scheme", "alg5", "--k", "3"});
    CHECK(low.code == 2);

    CliResult dup = run_cli({"analytic", "check", "--scheme", "alg4", "--k", "8",
                             "--xs", "1,1,5", "--ys", "6,4,a"});
    CHECK(dup.code == 2);
}

TEST_CASE("catalog verification subcommand") {
    CliResult r = run_cli({"catalog", "verify", "--scheme", "alg4", "-d", "3",
                           "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 entries checked, 0 unsafe") != std::string::npos);
}

TEST_CASE("filter-count output") {
    CliResult r = run_cli({"filter-count", "-d", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("57 / 136") != std::string::npos);
    CliResult r3 = run_cli({"filter-count", "-d", "3"});
    CHECK(r3.out.find("2100 / 4495") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"verify", "--scheme", "alg4"}).code == 2);        // missing k/d
    CHECK(run_cli({"verify", "--scheme", "alg9", "--k", "4", "-d", "2"}).code == 2);
    CHECK(run_cli({"filter-count", "-d", "9"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
