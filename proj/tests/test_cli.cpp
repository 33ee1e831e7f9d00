#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dyckwalk/cli.hpp"

using nlohmann::json;
using namespace dyckwalk::cli;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "dyckwalk");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json run_json(std::vector<std::string> args) {
    const CliRun r = run(std::move(args));
    return json::parse(r.out);
}

std::vector<std::string> strings(const json& arr) { return arr.get<std::vector<std::string>>(); }

}  // namespace

TEST(CliTable, GoldenRows) {
    EXPECT_EQ(strings(run_json({"table", "--n", "1", "--kmax", "4"})["results"]["counts"]),
              (std::vector<std::string>{"1", "1", "1", "1", "1"}));
    EXPECT_EQ(strings(run_json({"table", "--n", "2", "--kmax", "4"})["results"]["counts"]),
              (std::vector<std::string>{"1", "1", "2", "4", "8"}));
    const json rec = run_json({"table", "--n", "0", "--kmax", "2"});
    EXPECT_EQ(strings(rec["results"]["counts"]), (std::vector<std::string>{"1", "0", "0"}));
    EXPECT_EQ(rec["status"], "ok");
    EXPECT_EQ(rec["command"], "table");
    EXPECT_EQ(rec["parameters"]["n"], 0);
    EXPECT_EQ(rec["results"]["kmax"], 2);
    EXPECT_GE(rec["elapsed_ms"].get<double>(), 0.0);
}

TEST(CliTable, CountsAreStringsEvenWhenHuge) {
    const json rec = run_json({"table", "--n", "60", "--kmax", "60"});
    EXPECT_EQ(rec["results"]["counts"][60], "1583850964596120042686772779038896");
}

TEST(CliTable, CsvLayoutMatchesJson) {
    const CliRun csv = run({"table", "--n", "3", "--kmax", "6", "--format", "csv"});
    ASSERT_EQ(csv.code, 0);
    EXPECT_EQ(csv.out, "n,k,count\n3,0,1\n3,1,1\n3,2,2\n3,3,5\n3,4,13\n3,5,34\n3,6,89\n");
    const json rec = run_json({"table", "--n", "3", "--kmax", "6"});
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    for (std::size_t k = 0; std::getline(lines, line); ++k) {
        EXPECT_EQ(line.substr(line.rfind(',') + 1), rec["results"]["counts"][k].get<std::string>());
    }
}

TEST(CliHpoly, Coefficients) {
    EXPECT_EQ(strings(run_json({"hpoly", "--m", "5"})["results"]["coeffs"]), (std::vector<std::string>{"1", "-3", "1"}));
    EXPECT_EQ(strings(run_json({"hpoly", "--m", "1"})["results"]["coeffs"]), (std::vector<std::string>{"1"}));
    EXPECT_EQ(strings(run_json({"hpoly", "--m", "7"})["results"]["coeffs"]),
              (std::vector<std::string>{"1", "-5", "6", "-1"}));
    EXPECT_EQ(run({"hpoly", "--m", "5", "--format", "csv"}).out, "m,j,coeff\n5,0,1\n5,1,-3\n5,2,1\n");
}

TEST(CliVerify, Grids) {
    const CliRun small = run({"verify", "--n-max", "0", "--k-max", "0"});
    EXPECT_EQ(small.code, 0);
    const json rec = json::parse(small.out);
    EXPECT_EQ(rec["status"], "ok");
    EXPECT_EQ(rec["results"]["cells"].size(), 1U);
    EXPECT_TRUE(rec["results"]["mismatches"].empty());

    const CliRun mid = run({"verify", "--n-max", "6", "--k-max", "10"});
    EXPECT_EQ(mid.code, 0);
    EXPECT_EQ(json::parse(mid.out)["results"]["cells"].size(), 7U * 11U);
}

TEST(CliVerify, BruteForceColumnStopsAtGuard) {
    const json rec = run_json({"verify", "--n-max", "1", "--k-max", "16"});
    EXPECT_EQ(rec["status"], "ok");
    EXPECT_EQ(rec["results"]["bruteforce_max_order"], 14);
    for (const auto& cell : rec["results"]["cells"]) {
        EXPECT_EQ(cell["bruteforce"].is_null(), cell["k"].get<int>() > 14);
    }
}

TEST(CliWalk, ExactRationalGivesZScores) {
    const CliRun r = run({"walk", "--m", "3", "--p", "1/3", "--trials", "1000000", "--seed", "42"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json res = json::parse(r.out)["results"];
    EXPECT_EQ(res["p_mode"], "exact");
    EXPECT_EQ(res["pi_exact"], "3/7");
    EXPECT_EQ(res["l_exact"], "11/7");
    EXPECT_LT(std::abs(res["z_pi"].get<double>()), 5.0);
    EXPECT_LT(std::abs(res["z_l"].get<double>()), 5.0);
    EXPECT_EQ(res["truncated"], 0);
}

TEST(CliWalk, DecimalIsSimulationOnly) {
    const json res = run_json({"walk", "--m", "2", "--p", "0.3", "--trials", "1000", "--seed", "1"})["results"];
    EXPECT_EQ(res["p_mode"], "decimal");
    EXPECT_EQ(res["l_hat"].get<double>(), 1.0);
    EXPECT_TRUE(res["pi_exact"].is_null());
    EXPECT_TRUE(res["z_l"].is_null());
    EXPECT_TRUE(res["note"].is_string());
}

TEST(CliWalk, HalfHasNullExactFields) {
    const CliRun r = run({"walk", "--m", "4", "--p", "1/2", "--trials", "1000", "--seed", "1"});
    EXPECT_EQ(r.code, 0);
    const json res = json::parse(r.out)["results"];
    for (const char* key : {"pi_exact", "l_exact", "pi_exact_value", "l_exact_value", "z_pi", "z_l"}) {
        EXPECT_TRUE(res[key].is_null()) << key;
    }
    EXPECT_EQ(res["trials_run"], 1000);
    EXPECT_TRUE(res["note"].get<std::string>().find("1/2") != std::string::npos);
}

TEST(CliWalk, CsvAndJsonCarrySameNumbers) {
    const std::vector<std::string> args{"walk", "--m", "3", "--p", "2/5", "--trials", "2000", "--seed", "8"};
    const json res = run_json(args)["results"];
    std::vector<std::string> csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    std::istringstream lines(run(csv_args).out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "field,value");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        const std::string key = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        const json& expected = res.at(key);
        if (expected.is_null()) {
            EXPECT_EQ(value, "") << key;
        } else if (expected.is_string()) {
            EXPECT_EQ(value, expected.get<std::string>()) << key;
        } else {
            EXPECT_EQ(json::parse(value), expected) << key;
        }
        ++rows;
    }
    EXPECT_EQ(rows, res.size());
}

TEST(CliJson, RoundTripIsIdempotent) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table", "--n", "4", "--kmax", "9"},
             {"hpoly", "--m", "12"},
             {"verify", "--n-max", "2", "--k-max", "3"},
             {"walk", "--m", "4", "--p", "1/2", "--trials", "100", "--seed", "3"}}) {
        const std::string first = run(args).out;
        const json parsed = json::parse(first);
        EXPECT_EQ(parsed.dump() + "\n", first);
        EXPECT_EQ(json::parse(parsed.dump()), parsed);
    }
}

TEST(CliErrors, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"table", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"table", "--n", "-1", "--kmax", "3"}).code, 2);
    EXPECT_EQ(run({"table", "--n", "1", "--kmax", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"hpoly", "--m", "0"}).code, 2);
    EXPECT_EQ(run({"walk", "--m", "1", "--p", "1/3", "--trials", "10"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliErrors, DomainErrorsExitTwoWithRecord) {
    const CliRun r = run({"walk", "--m", "3", "--p", "3/2", "--trials", "10"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
    const json rec = json::parse(r.out);
    EXPECT_EQ(rec["status"], "error");
    EXPECT_EQ(rec["parameters"]["p"], "3/2");
    EXPECT_EQ(run({"walk", "--m", "3", "--p", "abc", "--trials", "10"}).code, 2);
    EXPECT_EQ(run({"walk", "--m", "3", "--p", "0", "--trials", "10"}).code, 2);
}

TEST(CliErrors, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(CliStatus, ExitCodes) {
    EXPECT_EQ(exit_code(Status::ok), 0);
    EXPECT_EQ(exit_code(Status::mismatch), 1);
    EXPECT_EQ(exit_code(Status::error), 2);
    EXPECT_EQ(to_string(Status::mismatch), "mismatch");
}
