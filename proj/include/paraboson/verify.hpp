#pragma once

#include <string>
#include <vector>

#include "paraboson/mzops.hpp"

namespace paraboson {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyConfig {
    int n = 3;
    int p = 2;
    int deg = 4;
    unsigned long seed = 20240801UL;
};

// Identity suites. Each check covers one family of identities at the configured
// desk scale; the detail string carries case counts or the first failing case.
std::vector<CheckResult> suite_relations(const VerifyConfig& cfg);
std::vector<CheckResult> suite_bases(const VerifyConfig& cfg);
std::vector<CheckResult> suite_mz(const VerifyConfig& cfg);
std::vector<CheckResult> suite_gz(const VerifyConfig& cfg);
std::vector<CheckResult> suite_appendix(const VerifyConfig& cfg);

// name in {relations, bases, mz, gz, appendix, all}; throws std::invalid_argument
// on an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace paraboson
