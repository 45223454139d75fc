#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core.hpp"

namespace grkit {

// Outcome of checking one claim. Status and counterexamples are coupled: fail
// means at least one counterexample, pass means none and a positive case
// count, partial is for vacuous or deliberately truncated runs and must say
// why in notes.
struct VerificationReport {
    enum class Status { pass, fail, partial };

    std::string id;  // short machine-readable claim id, e.g. "lemma2"
    std::string claim;
    Status status = Status::pass;
    std::vector<std::pair<std::string, std::string>> parameters;
    long long cases_checked = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    double wall_ms = 0.0;

    void param(const std::string& k, const std::string& v) { parameters.emplace_back(k, v); }
    void param(const std::string& k, long long v) { parameters.emplace_back(k, std::to_string(v)); }

    void counterexample(const std::string& c) {
        counterexamples.push_back(c);
        status = Status::fail;
    }

    // pass unless a counterexample arrived; callers set partial explicitly
    void finish() {
        if (status != Status::fail && counterexamples.empty() && cases_checked == 0 &&
            status != Status::partial) {
            status = Status::partial;
            notes.push_back("no cases applied");
        }
    }

    bool consistent() const {
        if (status == Status::fail && counterexamples.empty()) return false;
        if (status != Status::fail && !counterexamples.empty()) return false;
        if (status == Status::pass && cases_checked <= 0) return false;
        return true;
    }

    bool passed() const { return status == Status::pass; }

    static const char* status_name(Status s) {
        switch (s) {
            case Status::pass: return "pass";
            case Status::fail: return "fail";
            default: return "partial";
        }
    }

    nlohmann::ordered_json to_json(bool include_timing = false) const {
        nlohmann::ordered_json j;
        j["id"] = id;
        j["claim"] = claim;
        j["status"] = status_name(status);
        nlohmann::ordered_json params;
        for (const auto& [k, v] : parameters) params[k] = v;
        j["parameters"] = std::move(params);
        j["cases_checked"] = cases_checked;
        j["counterexamples"] = counterexamples;
        j["notes"] = notes;
        if (include_timing) j["wall_ms"] = wall_ms;
        return j;
    }

    std::string to_text() const {
        std::string s = "[" + std::string(status_name(status)) + "] " +
                        (id.empty() ? "" : id + ": ") + claim;
        for (const auto& [k, v] : parameters) s += "\n  " + k + " = " + v;
        s += "\n  cases checked: " + std::to_string(cases_checked);
        for (const auto& c : counterexamples) s += "\n  counterexample: " + c;
        for (const auto& n : notes) s += "\n  note: " + n;
        return s;
    }
};

}  // namespace grkit
