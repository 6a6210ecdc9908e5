#pragma once

#include <string>
#include <vector>

namespace charpoly {

// Aggregated result of one named verification, with counterexamples capped.
struct CheckResult {
    CheckResult() = default;
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    long long checked = 0;
    long long failed = 0;
    std::vector<std::string> failures;  // first few mismatch descriptions

    bool pass() const { return failed == 0; }
    void record_failure(std::string description, std::size_t cap = 5) {
        ++failed;
        if (failures.size() < cap) failures.push_back(std::move(description));
    }
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    void merge(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

}  // namespace charpoly
