#include "cli/cli.hpp"
#include "doctest.h"

using namespace cli;
using nlohmann::json;

namespace {

RunSpec spec(const std::string& cmd, oscrep::Config c, int kmax = 4) {
    RunSpec s;
    s.command = cmd;
    s.cfg = c;
    s.kmax = kmax;
    return s;
}

}  // namespace

TEST_CASE("classify reports irreducibility and regime") {
    auto rep = run(spec("classify", {3, 1, 2, -1, -1}));
    auto j = json::parse(serialize(rep, Format::Json));
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["overall"] == "pass");
    CHECK(j["checks"][0]["payload"]["irreducible"] == true);
    CHECK(j["checks"][0]["payload"]["gk_expected"] == 3);
    CHECK(exit_code(rep) == 0);
}

TEST_CASE("filtration table") {
    auto rep = run(spec("filtration", {3, 1, 2, -1, -1}, 3));
    REQUIRE(rep.dims.size() == 4);
    CHECK(rep.dims[0] == 1);
    CHECK(rep.dims[1] == 4);
    std::string csv = serialize(rep, Format::Csv);
    CHECK(csv.rfind("k,dim_Mk,delta\n0,1,1\n1,4,3\n", 0) == 0);
}

TEST_CASE("csv only for tabular commands") {
    auto rep = run(spec("classify", {3, 1, 2, -1, -1}));
    CHECK_THROWS_AS(serialize(rep, Format::Csv), UsageError);
    auto s = spec("classify", {3, 1, 2, -1, -1});
    s.out = Format::Csv;
    CHECK_THROWS_AS(validate(s), UsageError);
}

TEST_CASE("usage errors") {
    CHECK_THROWS_AS(validate(spec("nope", {3, 1, 2, 0, 0})), UsageError);
    CHECK_THROWS_AS(validate(spec("classify", {3, 2, 1, 0, 0})), UsageError);
    CHECK_THROWS_AS(validate(spec("gkdim", {3, 1, 2, 0, 0}, 5)), UsageError);
    auto s = spec("basis", {3, 1, 2, 0, 0});
    s.kmax = -1;
    CHECK_THROWS_AS(validate(s), UsageError);
}

TEST_CASE("json output is deterministic") {
    auto s = spec("verify-filtration", {3, 1, 2, -1, -1}, 3);
    std::string a = serialize(run(s), Format::Json);
    std::string b = serialize(run(s), Format::Json);
    CHECK(a == b);
    CHECK(a.find("elapsed_ms") == std::string::npos);
    s.timing = true;
    CHECK(serialize(run(s), Format::Json).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("failed records set the exit code") {
    Report r;
    r.spec = spec("classify", {3, 1, 2, 0, 0});
    CHECK(exit_code(r) == 0);
    CHECK(json::parse(serialize(r, Format::Json))["checks"].empty());
    CheckRecord c;
    c.name = "x";
    c.status = Status::Skipped;
    r.checks.push_back(c);
    CHECK(exit_code(r) == 0);
    c.status = Status::Fail;
    r.checks.push_back(c);
    CHECK(exit_code(r) == 1);
    CHECK(json::parse(serialize(r, Format::Json))["overall"] == "fail");
}

TEST_CASE("associated variety command") {
    auto rep = run(spec("verify-main-theorem", {4, 2, 2, -1, -1}, 4));
    CHECK(rep.overall() == Status::Pass);
    auto short_run = run(spec("verify-main-theorem", {4, 2, 2, -1, -1}, 2));
    CHECK(short_run.checks[0].status == Status::Skipped);
}

TEST_CASE("text output") {
    auto rep = run(spec("kernel-phi", {4, 1, 3, -1, -1}, 2));
    std::string t = serialize(rep, Format::Text);
    CHECK(t.find("overall: pass") != std::string::npos);
}
