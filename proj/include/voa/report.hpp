#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>
#include <json.hpp>

namespace voa {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string detail; // witness text for failures, optional notes for passes
};

struct VerificationReport {
    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<CaseResult> cases;

    void add(const std::string& id, bool pass, const std::string& detail = "") {
        cases.push_back({id, pass, detail});
    }
    void merge(const VerificationReport& other) {
        for (const auto& c : other.cases)
            cases.push_back({other.suite + "/" + c.id, c.pass, c.detail});
    }
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    size_t fail_count() const {
        size_t n = 0;
        for (const auto& c : cases)
            if (!c.pass) ++n;
        return n;
    }

    // deterministic: cases sorted by id, no timing data
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["params"] = params;
        j["all_pass"] = all_pass();
        std::vector<CaseResult> sorted = cases;
        std::sort(sorted.begin(), sorted.end(),
                  [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
        j["cases"] = nlohmann::json::array();
        for (const auto& c : sorted) {
            nlohmann::json jc;
            jc["id"] = c.id;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            j["cases"].push_back(jc);
        }
        return j;
    }
};

} // namespace voa
