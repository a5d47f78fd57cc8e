#pragma once

// The verification suite behind `genera verify`: exact property checks and
// two-oracle agreements, deterministic under a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace genera {

struct VerifyOptions {
    std::uint64_t seed = 12345;
    // negative-control hook: flips one a_hat K-table coefficient so the
    // K-table check must fail
    bool corrupt_ktable = false;
};

struct CheckResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

// line-oriented text report; byte-identical across runs at a fixed seed
std::string render_verify_report(const std::vector<CheckResult>& results,
                                 const VerifyOptions& options);

nlohmann::json verify_report_to_json(const std::vector<CheckResult>& results,
                                     const VerifyOptions& options);

}  // namespace genera
