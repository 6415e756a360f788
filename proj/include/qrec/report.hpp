#pragma once

#include <string>
#include <vector>

namespace qrec {

/// One named verification step. `skipped` marks checks whose hypotheses do
/// not hold on the instance (reported, never silently dropped).
struct Check {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<Check> checks;

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, false, std::move(detail)});
    }
    void add_skipped(std::string name, std::string reason) {
        checks.push_back({std::move(name), true, true, std::move(reason)});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.pass) return false;
        return true;
    }
};

} // namespace qrec
