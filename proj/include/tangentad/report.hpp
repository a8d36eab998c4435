#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace tangentad {

// Outcome of one diagram checked on one sample. Diagram ids are stable
// strings; a failing entry carries a witness describing both sides.
struct CheckResult {
    std::string diagram;
    std::string sample;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::vector<CheckResult> results;

    void add(std::string diagram, std::string sample, bool pass, std::string witness = "") {
        results.push_back({std::move(diagram), std::move(sample), pass, std::move(witness)});
    }

    void merge(const Report& other) {
        results.insert(results.end(), other.results.begin(), other.results.end());
    }

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& r : results)
            if (!r.pass) ++n;
        return n;
    }

    std::vector<CheckResult> failures() const {
        std::vector<CheckResult> f;
        for (const auto& r : results)
            if (!r.pass) f.push_back(r);
        return f;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
            nlohmann::json e{{"diagram", r.diagram}, {"sample", r.sample},
                             {"status", r.pass ? "pass" : "fail"}};
            if (!r.pass) e["witness"] = r.witness;
            arr.push_back(e);
        }
        return arr;
    }
};

} // namespace tangentad
