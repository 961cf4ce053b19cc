#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dj {

// Outcome of a verification sweep.
struct Report {
    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}
    std::string name;
    long checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;  // convention-dependent observations, not failures
    std::vector<std::string> findings;  // checks outside what is proved; never fail a run

    bool pass() const { return failures.empty(); }
    void check(bool ok, const std::string& what) {
        ++checked;
        if (!ok) failures.push_back(what);
    }
    void merge(const Report& o) {
        checked += o.checked;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        findings.insert(findings.end(), o.findings.begin(), o.findings.end());
    }
    std::string summary() const {
        std::string s = name + ": " + (pass() ? "pass" : "FAIL") + " (" + std::to_string(checked) + " checks";
        if (!pass()) s += ", " + std::to_string(failures.size()) + " failed; first: " + failures.front();
        return s + ")";
    }
};

}  // namespace dj
