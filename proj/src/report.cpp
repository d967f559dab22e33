#include "cubicver/report.hpp"

#include <sstream>

#include "json.hpp"

#include "cubicver/errors.hpp"
#include "cubicver/sha256.hpp"

namespace cubicver {

std::string status_name(CheckResult::Status s) {
    switch (s) {
    case CheckResult::Status::pass: return "pass";
    case CheckResult::Status::fail: return "fail";
    case CheckResult::Status::skipped: return "skipped";
    }
    throw InvalidInput("unknown check status");
}

bool RunReport::overall() const {
    for (const auto& c : checks)
        if (c.status == CheckResult::Status::fail) return false;
    return true;
}

void RunReport::validate() const {
    for (const auto& c : checks) {
        if (c.citation.empty())
            throw InvalidInput("check '" + c.check_id + "' has no citation");
        if (c.check_id.empty()) throw InvalidInput("check without an id");
        if (c.status == CheckResult::Status::pass && c.expected != c.actual)
            throw InconsistentMethods("check '" + c.check_id +
                                      "' passes but expected != actual");
    }
}

CheckResult make_check(std::string id, std::string expected, std::string actual,
                       std::string citation, std::uint64_t runtime_ms) {
    CheckResult c;
    c.check_id = std::move(id);
    c.status = expected == actual ? CheckResult::Status::pass : CheckResult::Status::fail;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.citation = std::move(citation);
    c.runtime_ms = runtime_ms;
    return c;
}

CheckResult make_predicate(std::string id, bool ok, std::string established,
                           std::string required, std::string violation, std::string citation,
                           std::uint64_t runtime_ms) {
    if (ok) return make_check(std::move(id), established, established, std::move(citation),
                              runtime_ms);
    return make_check(std::move(id), std::move(required), std::move(violation),
                      std::move(citation), runtime_ms);
}

CheckResult make_skipped(std::string id, std::string reason, std::string citation,
                         std::uint64_t runtime_ms) {
    CheckResult c;
    c.check_id = std::move(id);
    c.status = CheckResult::Status::skipped;
    c.expected = "";
    c.actual = std::move(reason);
    c.citation = std::move(citation);
    c.runtime_ms = runtime_ms;
    return c;
}

namespace {

// nlohmann keeps object keys sorted, which is exactly the canonical order
nlohmann::json report_json(const RunReport& r, bool mask_timings) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc;
        jc["check_id"] = c.check_id;
        jc["status"] = status_name(c.status);
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["citation"] = c.citation;
        jc["runtime_ms"] = mask_timings ? 0 : c.runtime_ms;
        checks.push_back(std::move(jc));
    }
    nlohmann::json j;
    j["tool_version"] = tool_version;
    j["command"] = r.command_line;
    j["seeds"] = r.seeds;
    j["checks"] = std::move(checks);
    j["overall"] = r.overall() ? "pass" : "fail";
    return j;
}

} // namespace

std::string canonical_form(const RunReport& r) {
    r.validate();
    return report_json(r, true).dump(2) + "\n";
}

std::string canonical_sha256(const RunReport& r) {
    return sha256_hex(canonical_form(r));
}

std::string report_to_json(const RunReport& r) {
    r.validate();
    nlohmann::json j = report_json(r, false);
    j["canonical_sha256"] = canonical_sha256(r);
    return j.dump(2) + "\n";
}

std::string report_to_text(const RunReport& r) {
    r.validate();
    std::ostringstream out;
    out << tool_version << "\n";
    out << "command: " << r.command_line << "\n";
    if (!r.seeds.empty()) {
        out << "seeds:";
        for (auto s : r.seeds) out << " " << s;
        out << "\n";
    }
    out << "\n";

    std::size_t failed = 0, skipped = 0;
    for (const auto& c : r.checks) {
        if (c.status == CheckResult::Status::fail) ++failed;
        if (c.status == CheckResult::Status::skipped) ++skipped;
        out << "[" << status_name(c.status) << "] " << c.check_id;
        if (c.status == CheckResult::Status::skipped) {
            out << ": " << c.actual;
        } else {
            out << ": expected " << c.expected;
            if (c.actual != c.expected) out << ", actual " << c.actual;
        }
        out << " (" << c.runtime_ms << " ms)\n";
        out << "    claim: " << c.citation << "\n";
    }

    out << "\n";
    out << "overall: " << (r.overall() ? "pass" : "fail") << " (" << r.checks.size()
        << " checks, " << failed << " failed, " << skipped << " skipped)\n";
    out << "canonical_sha256: " << canonical_sha256(r) << "\n";
    return out.str();
}

} // namespace cubicver
