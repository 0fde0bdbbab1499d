// Certificate reports: named facts plus pass/fail check lines, rendered
// as human text or flat machine-readable "section.key = value" lines.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace arrk {

struct CheckLine {
    std::string key;
    bool pass = false;
    std::string detail;  // witness on failure, commentary on pass
};

struct Report {
    std::string section;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<CheckLine> checks;

    explicit Report(std::string s = "") : section(std::move(s)) {}

    void fact(const std::string& key, const std::string& value) { facts.emplace_back(key, value); }
    void fact(const std::string& key, size_t value) { facts.emplace_back(key, std::to_string(value)); }
    void check(const std::string& key, bool pass, const std::string& detail = "") {
        checks.push_back({key, pass, detail});
    }
    void merge(const Report& sub) {
        for (const auto& [k, v] : sub.facts) facts.emplace_back(sub.section + "." + k, v);
        for (const auto& c : sub.checks)
            checks.push_back({sub.section + "." + c.key, c.pass, c.detail});
    }

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string human() const {
        std::string s = "== " + section + " ==\n";
        for (const auto& [k, v] : facts) s += k + " = " + v + "\n";
        for (const auto& c : checks) {
            s += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.key;
            if (!c.detail.empty()) s += "  (" + c.detail + ")";
            s += "\n";
        }
        if (!checks.empty()) s += std::string("result: ") + (ok() ? "PASS" : "FAIL") + "\n";
        return s;
    }

    std::string machine() const {
        std::string s;
        for (const auto& [k, v] : facts) s += section + "." + k + " = " + v + "\n";
        for (const auto& c : checks)
            s += section + ".check." + c.key + " = " + (c.pass ? "pass" : "fail") + "\n";
        if (!checks.empty())
            s += section + ".result = " + (ok() ? "pass" : "fail") + "\n";
        return s;
    }
};

}  // namespace arrk
