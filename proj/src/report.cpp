#include "gconv/report.hpp"

namespace gconv {

nlohmann::json set_to_json(const RSet& a) {
    auto end_json = [](const ExtRat& e) -> nlohmann::json {
        if (!e.finite()) return e.str();
        return e.value().wire();
    };
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& iv : a.parts()) {
        intervals.push_back({{"lo", end_json(iv.lo)},
                             {"hi", end_json(iv.hi)},
                             {"lo_closed", iv.lo_closed},
                             {"hi_closed", iv.hi_closed}});
    }
    return intervals;
}

namespace {

nlohmann::json check_json(const CheckResult& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

}  // namespace

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["title"] = title;
    j["pass"] = all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) j["checks"].push_back(check_json(c));
    return j;
}

std::string Report::text() const {
    std::string out = title + "\n";
    for (const auto& c : checks) {
        out += c.pass ? "  PASS  " : "  FAIL  ";
        out += c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += "\n";
    }
    out += all_pass() ? "all checks passed\n" : "CHECKS FAILED\n";
    return out;
}

nlohmann::json SuiteResult::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["cases"] = cases;
    j["passes"] = passes;
    j["pass"] = all_pass();
    j["failures"] = nlohmann::json::array();
    for (const auto& c : failures) j["failures"].push_back(check_json(c));
    return j;
}

std::string SuiteResult::text() const {
    std::string out = "suite " + suite + ": " + std::to_string(passes) + "/" +
                      std::to_string(cases) + " passed";
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.3fs)", wall_seconds);
    out += buf;
    out += "\n";
    for (const auto& c : failures) {
        out += "  FAIL  " + c.name;
        if (!c.detail.empty()) out += ": " + c.detail;
        out += "\n";
    }
    return out;
}

}  // namespace gconv
