#include <sstream>

#include "cli/cli.hpp"

namespace cli {

using nlohmann::json;

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "";
}

Status Report::overall() const {
    for (const auto& c : checks)
        if (c.status == Status::Fail) return Status::Fail;
    return Status::Pass;
}

int exit_code(const Report& r) { return r.overall() == Status::Fail ? 1 : 0; }

namespace {

std::string format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "";
}

json spec_json(const RunSpec& s) {
    return json{{"command", s.command}, {"n", s.cfg.n},       {"n1", s.cfg.n1},          {"n2", s.cfg.n2},
                {"l1", s.cfg.l1},       {"l2", s.cfg.l2},     {"kmax", s.kmax},          {"max_degree", s.max_degree},
                {"seed", s.seed},       {"out", format_name(s.out)}, {"budget_seconds", s.budget_seconds}};
}

json record_json(const CheckRecord& c, bool timing) {
    json j{{"name", c.name}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"payload", c.payload}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "k,dim_Mk,delta\n";
    for (std::size_t k = 0; k < r.dims.size(); ++k) {
        long long prev = k ? static_cast<long long>(r.dims[k - 1]) : 0;
        os << k << ',' << r.dims[k] << ',' << static_cast<long long>(r.dims[k]) - prev << '\n';
    }
    return os.str();
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << r.spec.command << ' ' << r.spec.cfg.str() << " kmax=" << r.spec.kmax << " max_degree=" << r.spec.max_degree
       << '\n';
    for (const auto& c : r.checks) {
        os << '[' << status_name(c.status) << "] " << c.name;
        if (!c.reason.empty()) os << " (" << c.reason << ')';
        os << '\n';
        for (const auto& [k, v] : c.payload.items()) os << "    " << k << ": " << v.dump() << '\n';
        if (r.spec.timing) os << "    elapsed_ms: " << c.elapsed_ms << '\n';
    }
    os << "overall: " << status_name(r.overall()) << '\n';
    return os.str();
}

}  // namespace

std::string serialize(const Report& r, Format f) {
    switch (f) {
        case Format::Csv:
            if (!r.tabular) throw UsageError("csv output is only available for filtration and gkdim");
            return to_csv(r);
        case Format::Text: return to_text(r);
        case Format::Json: break;
    }
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(record_json(c, r.spec.timing));
    json j{{"tool_version", kToolVersion},
           {"run", spec_json(r.spec)},
           {"checks", checks},
           {"overall", status_name(r.overall())}};
    return j.dump(2) + "\n";
}

}  // namespace cli
