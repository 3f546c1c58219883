#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace idg::cli {

enum class Status { Pass, Fail, BoundOnly };

struct CheckResult {
    std::string name;
    Status status = Status::Fail;
    std::string details;
};

struct Report {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::vector<CheckResult> checks;
    nlohmann::json result = nlohmann::json::object();

    void add(std::string name, bool pass, std::string details = {});
    void add(std::string name, Status status, std::string details = {});
    /// 0 when no check fails; bound-only checks do not fail a run.
    int exit_code() const;
    nlohmann::json to_json() const;
};

const char *status_name(Status s);

/// Runs one subcommand (args exclude the program name). The JSON report
/// goes to out, a summary and any usage or parse errors to err.
/// Returns 0 (all checks pass), 1 (a check failed) or 2 (usage error).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace idg::cli
