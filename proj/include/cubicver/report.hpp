#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cubicver {

inline constexpr const char* tool_version = "cubicver 1.0.0";

// One verification step with its verdict. The invariant is that a passing
// check has expected == actual byte for byte; predicate-style checks encode
// the established statement in both fields.
struct CheckResult {
    enum class Status { pass, fail, skipped };
    std::string check_id;
    Status status = Status::fail;
    std::string expected;
    std::string actual;
    std::string citation; // the mathematical claim this check verifies
    std::uint64_t runtime_ms = 0;
};

std::string status_name(CheckResult::Status s);

struct RunReport {
    std::string command_line;
    std::vector<std::uint64_t> seeds; // empty when no randomness was used
    std::vector<CheckResult> checks;

    bool overall() const; // true iff no check failed (skipped is not failure)
    // enforce the structural invariants: non-empty citations, and
    // status == pass implies expected == actual
    void validate() const;
};

// status derived from string equality of expected and actual
CheckResult make_check(std::string id, std::string expected, std::string actual,
                       std::string citation, std::uint64_t runtime_ms = 0);

// predicate-style check: on success both fields carry the established
// statement, on failure expected states the requirement and actual the
// violation
CheckResult make_predicate(std::string id, bool ok, std::string established,
                           std::string required, std::string violation, std::string citation,
                           std::uint64_t runtime_ms = 0);

CheckResult make_skipped(std::string id, std::string reason, std::string citation,
                         std::uint64_t runtime_ms = 0);

// Canonical machine-readable form: JSON with sorted keys, every runtime_ms
// zeroed, and no hash field. Identical inputs and seeds give identical bytes;
// this is what gets hashed for determinism checks.
std::string canonical_form(const RunReport& r);
std::string canonical_sha256(const RunReport& r);

// Emitted forms. JSON carries the true timings plus a canonical_sha256
// field; text is a line-oriented human view of the same verdicts.
std::string report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

} // namespace cubicver
