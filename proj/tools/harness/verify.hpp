#ifndef LINEIDEAL_HARNESS_VERIFY_HPP
#define LINEIDEAL_HARNESS_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harness/render.hpp"
#include "lineideal/field.hpp"

namespace lineideal::harness {

inline const std::vector<std::string> kAllChecks = {"facets",    "decomposition", "recursion", "p-ideal",
                                                    "invariants", "sr-ideal",      "lemmas"};

/// Comma separated list of check names; "all" selects every check.
std::vector<std::string> parse_checks(std::string_view list);

struct VerifyOptions {
    int max_n = 10;
    std::vector<std::string> checks = kAllChecks;
    Field field = Field::rationals();
    unsigned jobs = 0;
    /// Checks that need Betti tables stop at this many variables.
    int max_nvars = 12;
    bool strict = false;
    bool timings = false;
};

enum class Status { pass, fail, flagged };

std::string to_string(Status status);

struct Mismatch {
    std::string quantity;
    Json expected;
    Json computed;
};

struct NResult {
    int n = 0;
    Status status = Status::pass;
    std::vector<Mismatch> mismatches;
    std::vector<Discrepancy> flags;
    std::optional<double> seconds;
};

struct CheckReport {
    std::string name;
    int n_first = 0;
    int n_last = 0;  // n_first - 1 when the range is empty
    std::string note;
    std::vector<NResult> results;
};

struct VerificationReport {
    VerifyOptions options;
    std::vector<CheckReport> checks;

    [[nodiscard]] std::size_t count(Status status) const;
    /// 0 when nothing failed; flagged entries fail only in strict mode.
    [[nodiscard]] int exit_code() const;
};

VerificationReport run_verify(const VerifyOptions& options);

Json to_json(const VerificationReport& report);

} // namespace lineideal::harness

#endif
