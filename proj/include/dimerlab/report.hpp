#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace dimerlab {

/// Pass/fail per named invariant, with the ids that broke it.
struct ValidationReport {
    struct Check {
        std::string name;
        bool passed = true;
        std::vector<std::string> offenders;
    };

    std::vector<Check> checks;

    Check& add(std::string name) {
        checks.push_back({std::move(name), true, {}});
        return checks.back();
    }

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    bool failed(const std::string& name) const {
        const Check* c = find(name);
        return c != nullptr && !c->passed;
    }
};

inline void fail(ValidationReport::Check& check, std::string offender) {
    check.passed = false;
    if (check.offenders.size() < 32) check.offenders.push_back(std::move(offender));
}

} // namespace dimerlab
