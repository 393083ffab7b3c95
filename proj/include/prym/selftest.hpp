#pragma once

#include "prym/report.hpp"

#include <cstdint>
#include <string>

namespace prym {

struct SelftestResult {
    bool passed = false;
    Json report;
};

// Runs every module's invariant suite at desk scale. Fully deterministic
// for a fixed seed. Stops at the first failing invariant and reports the
// smallest failing input (cases are generated in increasing size). A
// nonempty inject_fault ("non_involution") pushes a known-bad input through
// the pipeline to exercise the failure path.
SelftestResult selftest(std::uint64_t seed, const std::string& inject_fault = "");

} // namespace prym
