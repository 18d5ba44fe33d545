#pragma once

#include <string>
#include <vector>

#include "peuler/padic.hpp"

namespace peuler {

struct VerifyCase {
    std::string label;
    bool pass = false;
    std::string lhs;  // both side values, also on passing cases
    std::string rhs;
};

struct VerificationReport {
    std::string check;
    std::string identity;
    std::string grid;
    i64 p = 0;
    int prec = 0;
    int passed = 0;
    int failed = 0;
    std::vector<VerifyCase> cases;

    bool ok() const { return failed == 0; }
};

struct VerifyConfig {
    i64 p = 3;
    int prec = 6;
    int guard = 2;
    int trials = 50;
    u64 seed = 1;
    int max_n = 6;
    std::vector<i64> conductors;  // empty: per-check default grid
    std::vector<i64> lambdas;     // empty: per-check default grid; entries are rationals n (den 1)
    int k = 0;                    // qlimit: single k, 0 = default {2,3,4}
    int r = 2;                    // higher_order
};

// check names: theorem1 theorem2 witt distribution egf9 theorem4
// higher_order qlimit
VerificationReport run_check(const std::string& name, const VerifyConfig& config);
std::vector<std::string> check_names();

}  // namespace peuler
