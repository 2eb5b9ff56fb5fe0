#pragma once

#include <string>
#include <utility>
#include <vector>

namespace magtop {

/// Outcome of a verification routine. Mismatches are recorded, not thrown.
struct CheckReport {
    explicit CheckReport(std::string check_name = {}) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    /// One line per instance checked, in a stable order.
    std::vector<std::string> lines;
    /// First mismatch, if any.
    std::string witness;

    void note(std::string line) { lines.push_back(std::move(line)); }
    void fail(const std::string& why) {
        if (passed) witness = why;
        passed = false;
        lines.push_back("MISMATCH " + why);
    }
    /// Folds another report into this one.
    void absorb(const CheckReport& other) {
        for (const auto& l : other.lines) lines.push_back(l);
        if (!other.passed) {
            if (passed) witness = other.witness;
            passed = false;
        }
    }
};

}  // namespace magtop
