#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "satake/tolerances.hpp"

namespace satake {

struct CheckResult {
    std::string check_id;
    std::string statement;
    std::string group;
    long samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::string schema_version = "1";
    std::string group;
    std::uint64_t seed = 42;
    double wall_time_s = 0.0;
    std::vector<CheckResult> entries;

    bool all_pass() const;
};

// Every property check for the named backend, deterministic given the seed;
// entries come back sorted by check_id.  fault_inject perturbs the named
// check's input, as a negative control that must fail.
VerifyReport verify_suite(const std::string& group_name, std::uint64_t seed,
                          const Tolerances& tol = {}, const std::string& fault_inject = {});

std::string report_json(const VerifyReport& r, int indent = 2);

}  // namespace satake
