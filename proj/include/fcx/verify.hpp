#pragma once

#include "fcx/homalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fcx {

struct CheckResult {
    std::string name;
    bool pass = false;
    // Informative checks report but never gate the suite verdict.
    bool gating = true;
    std::string detail;
};

struct SuiteResult {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t failed_count() const;
};

struct VerifyOptions {
    // Run only checks whose name starts with one of these; empty = all.
    std::vector<std::string> only;
    std::uint64_t sample_count = 10000;
    std::uint64_t sample_seed = 424242;
};

// Replays the golden examples and theorem property suites against the
// fixture data. Every check is exact; sampling is deterministic for a
// fixed seed.
SuiteResult verify_paper_suite(const std::string& fixtures_dir, const VerifyOptions& opts = {});

} // namespace fcx
