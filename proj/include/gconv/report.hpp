#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "gconv/rset.hpp"

namespace gconv {

/// JSON form of a set mirrors the interval list; rationals go out as "p/q".
nlohmann::json set_to_json(const RSet& a);

/// One named pass/fail check with a human line and a structured witness.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    // full witness, failures reproducible from this alone
    nlohmann::json witness = nlohmann::json::object();

    static CheckResult ok(std::string name, std::string detail = "",
                          nlohmann::json witness = nlohmann::json::object()) {
        return {std::move(name), true, std::move(detail), std::move(witness)};
    }
    static CheckResult fail(std::string name, std::string detail,
                            nlohmann::json witness = nlohmann::json::object()) {
        return {std::move(name), false, std::move(detail), std::move(witness)};
    }
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void require(std::string name, bool cond, std::string detail = "",
                 nlohmann::json witness = nlohmann::json::object()) {
        checks.push_back({std::move(name), cond, std::move(detail), std::move(witness)});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks) checks.push_back(c);
    }

    nlohmann::json to_json() const;
    std::string text() const;
};

struct SuiteResult {
    std::string suite;
    long cases = 0;
    long passes = 0;
    std::vector<CheckResult> failures;
    double wall_seconds = 0;  // text output only; JSON stays byte-stable per seed

    bool all_pass() const { return failures.empty(); }
    void record(const CheckResult& c) {
        ++cases;
        if (c.pass) ++passes;
        else failures.push_back(c);
    }
    void record(const Report& r) {
        for (const auto& c : r.checks) record(c);
    }

    nlohmann::json to_json() const;
    std::string text() const;
};

}  // namespace gconv
