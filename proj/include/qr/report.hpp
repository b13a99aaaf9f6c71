#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qr/idempotents.hpp"

namespace qr {

struct CheckResult {
    int criterion = 0;        // 1..12, the acceptance numbering
    std::string group;        // CLI --only filter key
    std::string name;
    bool pass = false;
    std::string detail;       // diagnostics on failure, summary on success
};

struct ReproOptions {
    std::vector<std::string> only; // empty = everything
    uint64_t seed = 20240814u;
    Exec exec = Exec::parallel;
};

// Runs the full reproduction suite (idempotent tables, coloring counts,
// enhancement structure, spectra, conjecture scans) and returns one result
// per check, in a fixed order.
std::vector<CheckResult> run_reproduction(const ReproOptions& opts);

} // namespace qr
