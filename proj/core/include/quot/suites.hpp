#pragma once

#include <string>
#include <vector>

namespace quot {

// One failed expectation: which identity broke, what kind of reference value
// it was checked against, and the first discrepant q-coefficient.
struct CheckFailure {
    std::string tag;        // internal identity tag
    std::string provenance; // closed-form | oracle | identity
    long qpower = 0;
    std::string expected, got;
};

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<CheckFailure> failures;
    bool ok() const { return failures.empty(); }
};

struct SuiteParams {
    long maxN = 0;  // 0 selects the suite default
    long trunc = 0; // 0 selects the suite default
    unsigned long long seed = 2026;
};

// The thirteen check suites, in acceptance order. run_suite throws
// std::out_of_range for an unknown name.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteParams& params = {});

} // namespace quot
