#pragma once

/**
 * @file cli.hpp
 * @brief Commands behind the `dyckwalk` executable.
 *
 * Each command returns an OutputRecord; failures are reported in it with
 * status error rather than thrown. run_cli parses argv, runs one command
 * and writes the record as JSON (default) or CSV. Exit codes: 0 ok,
 * 1 mismatch, 2 usage or domain error.
 */

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

namespace dyckwalk::cli {

enum class Status { ok, mismatch, error };

std::string to_string(Status s);
int exit_code(Status s);

struct OutputRecord {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    Status status = Status::ok;
    double elapsed_ms = 0.0;

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

OutputRecord cmd_table(unsigned n, std::size_t kmax);
OutputRecord cmd_verify(unsigned n_max, std::size_t k_max);
/// `p` is "a/b" (exact comparisons available) or a decimal literal (simulation only).
OutputRecord cmd_walk(long m, const std::string& p, std::uint64_t trials, std::uint64_t seed,
                      std::uint64_t max_steps);
OutputRecord cmd_hpoly(long m);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dyckwalk::cli
