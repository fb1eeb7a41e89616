#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gconv/report.hpp"

namespace gconv {

struct SuiteOptions {
    long trials = 200;
    std::uint64_t seed = 7;
    std::int64_t depth = 16;
    std::int64_t base_count = 16;   // K
    std::int64_t sets = 50;
    std::int64_t n_terms = 100000;  // oracle evaluation horizon
    std::string method = "lim";
};

std::vector<std::string> suite_names();

/// Named suite registry: thm3.1, ex33, thm4.5, sec5, sec5-counterexamples,
/// traits, oracle-hull. Deterministic given the options (seed included).
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace gconv
