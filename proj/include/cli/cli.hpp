#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "oscrep/oscrep.hpp"

namespace cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Format { Json, Csv, Text };

struct RunSpec {
    std::string command;
    oscrep::Config cfg;
    int kmax = 4;
    int max_degree = 4;
    unsigned seed = 0;
    Format out = Format::Json;
    double budget_seconds = 0;  // 0 means unlimited
    bool timing = false;        // elapsed times make output non-reproducible, so opt-in
};

// Bad flags, invalid configs and impossible output requests.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct CheckRecord {
    std::string name;
    std::string anchor;
    Status status = Status::Pass;
    nlohmann::json payload = nlohmann::json::object();
    std::string reason;  // set for skipped or failed records
    double elapsed_ms = 0;
};

struct Report {
    RunSpec spec;
    std::vector<CheckRecord> checks;
    std::vector<std::size_t> dims;  // filled by tabular commands
    bool tabular = false;

    Status overall() const;
};

using ProgressSink = std::function<void(const std::string&)>;

const std::vector<std::string>& commands();
void validate(const RunSpec& spec);  // throws UsageError
Report run(const RunSpec& spec, const ProgressSink& progress = {});
std::string serialize(const Report& r, Format f);
int exit_code(const Report& r);

// The full acceptance matrix, one record per criterion, in fixed order.
std::vector<CheckRecord> acceptance_suite(double budget_seconds, const ProgressSink& progress = {});

}  // namespace cli
