#pragma once

#include <string>
#include <vector>

#include "fundcoef/bqf.hpp"

namespace fundcoef::checks {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double measured = 0.0;  // error or defect actually observed
    double tolerance = 0.0; // 0 for exact checks
    std::string detail;
};

// Suites: "theta", "ez", "inversion", "sieve", "doubling"; "all" runs each.
// DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite);

const std::vector<std::string>& suite_names();

// Gamma_0(4) matrices as words in T = [1,1;0,1], U = [1,0;4,1], their
// inverses t, u, and N = -I.
bqf::Matrix2 gamma0_4_word(const std::string& word);

} // namespace fundcoef::checks
