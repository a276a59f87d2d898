#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace actm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Human-readable result bundle produced by the CLI commands: named checks
/// plus the named scalar values a command wants to surface.
struct Report {
    std::string subject;
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> scalars;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void print(std::ostream& os) const {
        os << "subject: " << subject << "\n";
        for (const auto& c : checks) {
            os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) os << " (" << c.detail << ")";
            os << "\n";
        }
        for (const auto& [k, v] : scalars) os << "  " << k << " = " << v << "\n";
        os << "result: " << (all_pass() ? "pass" : "FAIL") << "\n";
    }
};

} // namespace actm
