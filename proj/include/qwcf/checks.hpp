#pragma once

#include <string>
#include <vector>

namespace qwcf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // worst deviation vs tolerance, or failure context
};

// Runs every library invariant (channel identities, closed-form vs simulation
// agreement, solver self-consistency, serialization determinism) on fixed
// deterministic inputs plus seeded random states. All checks run even after
// a failure.
std::vector<CheckResult> run_all_checks(unsigned seed = 20240901u);

} // namespace qwcf
