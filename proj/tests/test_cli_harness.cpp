#include <doctest.h>

#include <stdexcept>

#include "harness/render.hpp"
#include "harness/verify.hpp"

using namespace lineideal;
using namespace lineideal::harness;

namespace {

VerifyOptions options_for(int max_n, std::vector<std::string> checks) {
    VerifyOptions o;
    o.max_n = max_n;
    o.checks = std::move(checks);
    o.jobs = 1;
    return o;
}

} // namespace

TEST_CASE("JSON encodings follow the documented schema") {
    CHECK(to_json(VarSet{1, 3, 5}).dump() == "[1,3,5]");
    CHECK(to_json(line_facet_ideal(3)).dump() == "[[1,3],[2]]");
    CHECK(variable_names(3).dump() == R"(["x1","x2","x3"])");

    const auto table = graded_betti(line_facet_ideal(4), {Field::rationals(), 1});
    CHECK(to_json(table).dump() == R"([{"i":0,"j":2,"beta":3},{"i":1,"j":3,"beta":2}])");

    const auto six = omega(6);
    CHECK(to_json(six.members.front()).dump() == R"({"kind":"A_1","vars":[1,2]})");
}

TEST_CASE("invariant report JSON carries source, field and flags") {
    const auto j = to_json(closed_form_invariants(2));
    CHECK(j["source"] == "closed-form");
    CHECK(j["field"] == "QQ");
    REQUIRE(j["flags"].size() == 1);
    CHECK(j["flags"][0]["invariant"] == "height");
    CHECK(j["flags"][0]["reference"] == 1);
    CHECK(j["flags"][0]["reported"] == 2);
    CHECK_FALSE(j.contains("betti"));
}

TEST_CASE("JSON output round-trips byte for byte") {
    const auto report = run_verify(options_for(8, kAllChecks));
    const std::string text = dump(to_json(report));
    CHECK(dump(Json::parse(text)) == text);

    const auto inv = dump(to_json(hochster_invariants(line_facet_ideal(7), {Field::rationals(), 1})));
    CHECK(dump(Json::parse(inv)) == inv);
}

TEST_CASE("parse_checks") {
    CHECK(parse_checks("all") == kAllChecks);
    CHECK(parse_checks("recursion,facets") == std::vector<std::string>{"facets", "recursion"});
    CHECK(parse_checks("facets,facets") == std::vector<std::string>{"facets"});
    CHECK_THROWS_AS(parse_checks("facets,nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_checks(""), std::invalid_argument);
}

TEST_CASE("parse_format") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("to_csv") {
    CHECK(to_csv(line_facets(3)) == "index,monomial,vars\n1,x1x3,1 3\n2,x2,2\n");
}

TEST_CASE("verify: ranges, statuses and exit codes") {
    const auto report = run_verify(options_for(11, {"invariants"}));
    REQUIRE(report.checks.size() == 1);
    const auto& c = report.checks[0];
    CHECK(c.n_first == 1);
    CHECK(c.n_last == 11);
    CHECK(c.results.size() == 11);
    CHECK(report.count(Status::fail) == 0);
    CHECK(report.count(Status::flagged) == 1);
    CHECK(c.results[1].status == Status::flagged);
    CHECK(report.exit_code() == 0);

    auto strict = options_for(3, {"invariants"});
    strict.strict = true;
    CHECK(run_verify(strict).exit_code() == 1);

    const auto combinatorial = run_verify(options_for(16, {"facets", "decomposition", "recursion"}));
    CHECK(combinatorial.count(Status::pass) == 16 + 16 + 15);
    CHECK(combinatorial.exit_code() == 0);
}

TEST_CASE("verify: Betti-table checks stop at the variable limit and say so") {
    auto o = options_for(9, parse_checks("sr-ideal,facets"));
    o.max_nvars = 6;
    const auto report = run_verify(o);
    REQUIRE(report.checks.size() == 2);
    CHECK(report.checks[0].name == "facets");
    CHECK(report.checks[0].n_last == 9);
    CHECK(report.checks[0].note.empty());
    CHECK(report.checks[1].n_last == 6);
    CHECK_FALSE(report.checks[1].note.empty());
    CHECK(to_json(report)["checks"][1]["n_last"] == 6);
}

TEST_CASE("verify: timings are opt-in") {
    auto o = options_for(3, {"facets"});
    CHECK_FALSE(to_json(run_verify(o))["checks"][0]["results"][0].contains("seconds"));
    o.timings = true;
    CHECK(to_json(run_verify(o))["checks"][0]["results"][0].contains("seconds"));
}

TEST_CASE("verify: report is independent of the job count") {
    auto one = options_for(9, kAllChecks);
    auto many = one;
    many.jobs = 5;
    CHECK(dump(to_json(run_verify(one))) == dump(to_json(run_verify(many))));
}

TEST_CASE("verify: every check passes through n = 10") {
    const auto report = run_verify(options_for(10, kAllChecks));
    CHECK(report.count(Status::fail) == 0);
    CHECK(report.exit_code() == 0);
    CHECK_THROWS_AS(run_verify(options_for(0, kAllChecks)), std::invalid_argument);
}
