#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace partalg {

struct CheckEntry {
    std::string suite;
    std::string rule;
    std::string label;
    std::string statement;
    bool passed = false;
};

struct Report {
    std::vector<CheckEntry> entries;

    void add(CheckEntry e) { entries.push_back(std::move(e)); }

    void append(const Report& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }

    std::size_t failures() const {
        std::size_t k = 0;
        for (const auto& e : entries) k += !e.passed;
        return k;
    }

    bool all_passed() const { return failures() == 0; }

    std::string to_text(bool failures_only = false) const {
        std::string out;
        for (const auto& e : entries) {
            if (failures_only && e.passed) continue;
            out += (e.passed ? "PASS " : "FAIL ") + e.suite + " " + e.rule + " [" + e.label + "] " + e.statement + "\n";
        }
        if (all_passed()) out += "all passed (" + std::to_string(entries.size()) + " checks)\n";
        else out += std::to_string(failures()) + " of " + std::to_string(entries.size()) + " checks failed\n";
        return out;
    }
};

}  // namespace partalg
