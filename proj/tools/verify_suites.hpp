#ifndef DELINS_TOOLS_VERIFY_SUITES_HPP
#define DELINS_TOOLS_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>

#include <delins/config.hpp>

namespace delins::verify {

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
    std::string summary() const;
};

SuiteResult run_suite(const std::string& name, int max_m, const Limits& limits);

}  // namespace delins::verify

#endif
