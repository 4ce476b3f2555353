#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdsw {

struct SelftestOptions {
    bool full = false;  // heavier sampling on the rank 3-4 types
    unsigned long seed = 20021;
};

struct SelftestResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Property suites with exact arithmetic; one result per suite. Progress
/// lines go to `log` when given.
std::vector<SelftestResult> run_selftest(const SelftestOptions& opt, std::ostream* log = nullptr);

}  // namespace cdsw
